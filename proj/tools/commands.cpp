#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>

#include "claims.hpp"
#include "json.hpp"
#include "treeirr/degree_sequence.hpp"
#include "treeirr/enumeration.hpp"
#include "treeirr/extremal.hpp"
#include "treeirr/indices.hpp"

namespace treeirr::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

int fail(std::ostream& err, const error& e) {
  err << "error: " << e.what() << "\n";
  return 1;
}

InternalDegreeSequence parse_cli_sequence(const std::string& text) {
  bool blank = std::all_of(text.begin(), text.end(),
                           [](unsigned char ch) { return std::isspace(ch); });
  if (blank) raise(errc::malformed_input, "sequence text is empty");
  return InternalDegreeSequence::parse(text);
}

std::string summary_line(const InternalDegreeSequence& seq, std::size_t realization_count) {
  RealizationCounts counts = realization_counts(seq);
  return "sequence " + seq.to_string() + ": k=" + std::to_string(seq.length()) +
         ", n=" + std::to_string(counts.total_vertices) +
         ", leaves=" + std::to_string(counts.leaf_count) +
         ", realizations=" + std::to_string(realization_count);
}

ordered_json sequence_json(const InternalDegreeSequence& seq) {
  return ordered_json(seq.degrees());
}

const char* flag_of(long long oracle, long long claimed) {
  return oracle == claimed ? "MATCH" : "MISMATCH";
}

}  // namespace

bool parse_index_selection(const std::string& text, IndexSelection& out) {
  if (text == "irr") out = IndexSelection::irr;
  else if (text == "sigma") out = IndexSelection::sigma;
  else if (text == "both") out = IndexSelection::both;
  else return false;
  return true;
}

int cmd_validate(const std::string& seq_text, std::ostream& out, std::ostream& err) {
  try {
    InternalDegreeSequence seq = parse_cli_sequence(seq_text);
    RealizationCounts counts = realization_counts(seq);
    out << "k=" << seq.length() << ", n=" << counts.total_vertices
        << ", leaves=" << counts.leaf_count << "\n";
    return 0;
  } catch (const error& e) {
    return fail(err, e);
  }
}

int cmd_enumerate(const std::string& seq_text, const CommandOptions& options, std::ostream& out,
                  std::ostream& err) {
  try {
    InternalDegreeSequence seq = parse_cli_sequence(seq_text);
    EnumerationOptions eopts{options.max_internal};
    std::vector<Realization> realizations = enumerate_realizations(seq, eopts);

    switch (options.format) {
      case Format::table:
      case Format::csv: {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < realizations.size(); ++i) {
          const Realization& r = realizations[i];
          rows.push_back({std::to_string(i), r.code.to_hex(), describe_arrangement(r),
                          std::to_string(albertson_index(r.tree)),
                          std::to_string(sigma_index(r.tree))});
        }
        if (options.format == Format::table) {
          out << summary_line(seq, realizations.size()) << "\n";
          write_table(out, {"id", "code", "arrangement", "irr", "sigma"}, rows);
        } else {
          write_csv(out, {"id", "canonical_code", "arrangement", "irr", "sigma"}, rows);
        }
        break;
      }
      case Format::json: {
        RealizationCounts counts = realization_counts(seq);
        ordered_json doc;
        doc["job"] = "enumerate";
        doc["sequence"] = sequence_json(seq);
        doc["k"] = seq.length();
        doc["vertex_count"] = counts.total_vertices;
        doc["leaf_count"] = counts.leaf_count;
        doc["realizations"] = ordered_json::array();
        for (std::size_t i = 0; i < realizations.size(); ++i) {
          const Realization& r = realizations[i];
          ordered_json item;
          item["id"] = i;
          item["canonical_code"] = r.code.to_hex();
          item["arrangement"] = describe_arrangement(r);
          item["irr"] = albertson_index(r.tree);
          item["sigma"] = sigma_index(r.tree);
          item["vertex_count"] = r.tree.vertex_count();
          ordered_json edges = ordered_json::array();
          for (const Edge& e : r.tree.edges()) edges.push_back({e.a, e.b});
          item["edges"] = std::move(edges);
          doc["realizations"].push_back(std::move(item));
        }
        out << doc.dump(2) << "\n";
        break;
      }
      case Format::dot: {
        out << "// " << summary_line(seq, realizations.size()) << "\n";
        for (std::size_t i = 0; i < realizations.size(); ++i) {
          const Realization& r = realizations[i];
          std::string label = seq.to_string() + " #" + std::to_string(i) + " " +
                              describe_arrangement(r) + " irr=" +
                              std::to_string(albertson_index(r.tree)) + " sigma=" +
                              std::to_string(sigma_index(r.tree));
          write_dot(out, r.tree, "r" + std::to_string(i), label);
        }
        break;
      }
    }
    return 0;
  } catch (const error& e) {
    return fail(err, e);
  }
}

int cmd_extremal(const std::string& seq_text, IndexSelection selection,
                 const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.format == Format::dot) {
      raise(errc::malformed_input, "format dot is only supported by the enumerate job");
    }
    InternalDegreeSequence seq = parse_cli_sequence(seq_text);
    EnumerationOptions eopts{options.max_internal};

    std::vector<IndexKind> kinds;
    if (selection != IndexSelection::sigma) kinds.push_back(IndexKind::albertson);
    if (selection != IndexSelection::irr) kinds.push_back(IndexKind::sigma);

    std::vector<ExtremalResult> results;
    for (IndexKind kind : kinds) results.push_back(extremal_search(seq, kind, eopts));

    std::vector<std::vector<std::string>> witness_rows;
    for (const ExtremalResult& result : results) {
      for (const Realization& w : result.min_witnesses)
        witness_rows.push_back({index_kind_name(result.kind), "min",
                                std::to_string(result.min_value), w.code.to_hex(),
                                describe_arrangement(w)});
      for (const Realization& w : result.max_witnesses)
        witness_rows.push_back({index_kind_name(result.kind), "max",
                                std::to_string(result.max_value), w.code.to_hex(),
                                describe_arrangement(w)});
    }

    std::vector<std::vector<std::string>> claim_rows;
    if (options.check_paper) {
      for (const ExtremalClaim& claim : extremal_claims()) {
        if (seq.to_string() != claim.sequence) continue;
        for (const ExtremalResult& result : results) {
          if (result.kind != claim.kind) continue;
          long long oracle = claim.is_max ? result.max_value : result.min_value;
          claim_rows.push_back({index_kind_name(claim.kind), claim.is_max ? "max" : "min",
                                std::to_string(oracle), std::to_string(claim.claimed),
                                flag_of(oracle, claim.claimed), claim.provenance});
        }
      }
    }

    switch (options.format) {
      case Format::table: {
        std::size_t realization_count = count_realizations(seq, eopts);
        out << summary_line(seq, realization_count) << "\n";
        for (const ExtremalResult& result : results)
          out << index_kind_name(result.kind) << ": min " << result.min_value << ", max "
              << result.max_value << "\n";
        write_table(out, {"index", "extreme", "value", "code", "arrangement"}, witness_rows);
        if (options.check_paper) {
          if (claim_rows.empty()) {
            out << "no published claims for this sequence\n";
          } else {
            out << "published claims:\n";
            write_table(out, {"index", "extreme", "oracle", "claimed", "flag", "source"},
                        claim_rows);
          }
        }
        break;
      }
      case Format::csv: {
        write_csv(out, {"index", "extreme", "value", "code", "arrangement"}, witness_rows);
        if (options.check_paper && !claim_rows.empty()) {
          out << "\n";
          write_csv(out, {"index", "extreme", "oracle", "claimed", "flag", "source"}, claim_rows);
        }
        break;
      }
      case Format::json: {
        RealizationCounts counts = realization_counts(seq);
        ordered_json doc;
        doc["job"] = "extremal";
        doc["sequence"] = sequence_json(seq);
        doc["k"] = seq.length();
        doc["vertex_count"] = counts.total_vertices;
        doc["leaf_count"] = counts.leaf_count;
        doc["results"] = ordered_json::array();
        for (const ExtremalResult& result : results) {
          ordered_json entry;
          entry["index"] = index_kind_name(result.kind);
          for (bool is_max : {false, true}) {
            ordered_json side;
            side["value"] = is_max ? result.max_value : result.min_value;
            side["witnesses"] = ordered_json::array();
            for (const Realization& w : (is_max ? result.max_witnesses : result.min_witnesses)) {
              ordered_json witness;
              witness["canonical_code"] = w.code.to_hex();
              witness["arrangement"] = describe_arrangement(w);
              side["witnesses"].push_back(std::move(witness));
            }
            entry[is_max ? "max" : "min"] = std::move(side);
          }
          doc["results"].push_back(std::move(entry));
        }
        if (options.check_paper) {
          doc["published_claims"] = ordered_json::array();
          for (const auto& row : claim_rows) {
            ordered_json claim;
            claim["index"] = row[0];
            claim["extreme"] = row[1];
            claim["oracle"] = std::stoll(row[2]);
            claim["claimed"] = std::stoll(row[3]);
            claim["flag"] = row[4];
            claim["source"] = row[5];
            doc["published_claims"].push_back(std::move(claim));
          }
        }
        out << doc.dump(2) << "\n";
        break;
      }
      case Format::dot:
        break;  // rejected above
    }
    return 0;
  } catch (const error& e) {
    return fail(err, e);
  }
}

int cmd_conjecture(int max_degree, const CommandOptions& options, std::ostream& out,
                   std::ostream& err) {
  try {
    if (options.format == Format::dot)
      raise(errc::malformed_input, "format dot is only supported by the enumerate job");
    if (max_degree < 2) raise(errc::malformed_input, "--max-degree must be at least 2");

    EnumerationOptions eopts{options.max_internal};
    std::vector<ConjectureReport> reports = sweep_gap_identity(max_degree, eopts);
    std::stable_partition(reports.begin(), reports.end(),
                          [](const ConjectureReport& r) { return !r.confirmed(); });
    long long refuted = 0;
    for (const ConjectureReport& r : reports)
      if (!r.confirmed()) ++refuted;
    long long confirmed = static_cast<long long>(reports.size()) - refuted;

    std::vector<std::vector<std::string>> rows;
    for (const ConjectureReport& r : reports) {
      const std::vector<int>& d = r.sequence.degrees();
      rows.push_back({std::to_string(d[0]), std::to_string(d[1]), std::to_string(d[2]),
                      std::to_string(r.predicted_gap), std::to_string(r.oracle_gap),
                      r.confirmed() ? "confirmed" : "refuted"});
    }

    switch (options.format) {
      case Format::table:
        out << reports.size() << (reports.size() == 1 ? " sequence, " : " sequences, ")
            << confirmed << " confirmed, " << refuted << " refuted\n";
        write_table(out, {"d1", "d2", "d3", "predicted_gap", "oracle_gap", "verdict"}, rows);
        break;
      case Format::csv:
        write_csv(out, {"d1", "d2", "d3", "predicted_gap", "oracle_gap", "verdict"}, rows);
        break;
      case Format::json: {
        ordered_json doc;
        doc["job"] = "conjecture";
        doc["max_degree"] = max_degree;
        doc["sequences"] = reports.size();
        doc["confirmed"] = confirmed;
        doc["refuted"] = refuted;
        doc["reports"] = ordered_json::array();
        for (const ConjectureReport& r : reports) {
          ordered_json entry;
          entry["sequence"] = sequence_json(r.sequence);
          entry["predicted_gap"] = r.predicted_gap;
          entry["oracle_gap"] = r.oracle_gap;
          entry["verdict"] = r.confirmed() ? "confirmed" : "refuted";
          doc["reports"].push_back(std::move(entry));
        }
        out << doc.dump(2) << "\n";
        break;
      }
      case Format::dot:
        break;  // rejected above
    }
    return 0;
  } catch (const error& e) {
    return fail(err, e);
  }
}

namespace {

struct PaperRow {
  std::string section;
  std::string label;
  std::string index;
  long long oracle = 0;
  long long claimed = 0;
  std::string source;
};

std::vector<PaperRow> paper_rows() {
  std::vector<PaperRow> rows;

  // arrangement value tables for the two worked sequences
  for (const char* seq_text : {"4,3,2", "8,5,4,2"}) {
    std::string section = std::string(seq_text) == "4,3,2" ? "k3-arrangements" : "k4-placements";
    InternalDegreeSequence seq = InternalDegreeSequence::parse(seq_text);
    std::vector<Realization> realizations = enumerate_realizations(seq);
    std::map<std::string, const Realization*> by_arrangement;
    for (const Realization& r : realizations) by_arrangement[describe_arrangement(r)] = &r;

    for (const ValueClaim& claim : value_claims()) {
      if (std::string(claim.sequence) != seq_text) continue;
      const Realization* r = by_arrangement.at(claim.arrangement);
      long long oracle = tree_index(r->tree, claim.kind);
      rows.push_back({section, claim.arrangement, index_kind_name(claim.kind), oracle,
                      claim.claimed, claim.provenance});
    }
  }

  // the published extremal summary for (8,5,4,2)
  for (const ExtremalClaim& claim : extremal_claims()) {
    if (std::string(claim.sequence) != "8,5,4,2") continue;
    ExtremalResult result =
        extremal_search(InternalDegreeSequence::parse(claim.sequence), claim.kind);
    long long oracle = claim.is_max ? result.max_value : result.min_value;
    rows.push_back({"k4-extremal", claim.is_max ? "max" : "min", index_kind_name(claim.kind),
                    oracle, claim.claimed, claim.provenance});
  }

  // the printed closed forms for the k=3 maximum/minimum, arbitrated by the
  // oracle on (4,3,2)
  ExtremalResult k3 = extremal_search(InternalDegreeSequence::parse("4,3,2"),
                                      IndexKind::albertson);
  rows.push_back({"k3-formulas", "printed-max-formula", "irr", k3.max_value,
                  k3_printed_irr_max(4, 3, 2), "maximum formula as printed"});
  rows.push_back({"k3-formulas", "corrected-max-formula", "irr", k3.max_value,
                  k3_corrected_irr_max(4, 3, 2), "maximum formula / additive correction"});
  rows.push_back({"k3-formulas", "min-formula", "irr", k3.min_value, k3_irr_min_formula(4, 3, 2),
                  "minimum formula as printed"});
  return rows;
}

}  // namespace

int cmd_paper_tables(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.format == Format::dot)
      raise(errc::malformed_input, "format dot is only supported by the enumerate job");

    std::vector<PaperRow> rows = paper_rows();

    switch (options.format) {
      case Format::table: {
        std::string section;
        std::vector<std::vector<std::string>> pending;
        auto flush = [&] {
          if (pending.empty()) return;
          out << "== " << section << " ==\n";
          write_table(out, {"row", "index", "oracle", "claimed", "flag", "source"}, pending);
          pending.clear();
        };
        for (const PaperRow& row : rows) {
          if (row.section != section) {
            flush();
            section = row.section;
          }
          pending.push_back({row.label, row.index, std::to_string(row.oracle),
                             std::to_string(row.claimed), flag_of(row.oracle, row.claimed),
                             row.source});
        }
        flush();
        break;
      }
      case Format::csv: {
        std::vector<std::vector<std::string>> lines;
        for (const PaperRow& row : rows)
          lines.push_back({row.section, row.label, row.index, std::to_string(row.oracle),
                           std::to_string(row.claimed), flag_of(row.oracle, row.claimed),
                           row.source});
        write_csv(out, {"section", "row", "index", "oracle", "claimed", "flag", "source"}, lines);
        break;
      }
      case Format::json: {
        ordered_json doc;
        doc["job"] = "paper-tables";
        doc["rows"] = ordered_json::array();
        for (const PaperRow& row : rows) {
          ordered_json entry;
          entry["section"] = row.section;
          entry["row"] = row.label;
          entry["index"] = row.index;
          entry["oracle"] = row.oracle;
          entry["claimed"] = row.claimed;
          entry["flag"] = flag_of(row.oracle, row.claimed);
          entry["source"] = row.source;
          doc["rows"].push_back(std::move(entry));
        }
        out << doc.dump(2) << "\n";
        break;
      }
      case Format::dot:
        break;  // rejected above
    }
    return 0;
  } catch (const error& e) {
    return fail(err, e);
  }
}

}  // namespace treeirr::cli
