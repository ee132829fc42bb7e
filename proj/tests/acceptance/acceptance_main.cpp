// Acceptance suite: every criterion prints one [PASS]/[FAIL] line; the
// process exits nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "freetree_oracle.hpp"
#include "json.hpp"
#include "prufer_oracle.hpp"
#include "treeirr/extremal.hpp"

using namespace treeirr;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

template <typename Fn>
void run(int number, const std::string& name, Fn&& fn) {
  try {
    std::string detail;
    bool pass = fn(detail);
    report(number, name, pass, detail);
  } catch (const std::exception& e) {
    report(number, name, false, std::string("exception: ") + e.what());
  }
}

InternalDegreeSequence seq(const char* text) { return InternalDegreeSequence::parse(text); }

nlohmann::json paper_tables_json() {
  cli::CommandOptions options;
  options.format = cli::Format::json;
  std::ostringstream out, err;
  if (cli::cmd_paper_tables(options, out, err) != 0)
    throw std::runtime_error("paper-tables failed: " + err.str());
  return nlohmann::json::parse(out.str());
}

const nlohmann::json& find_row(const nlohmann::json& doc, const std::string& section,
                               const std::string& row, const std::string& index) {
  for (const auto& item : doc["rows"])
    if (item["section"] == section && item["row"] == row && item["index"] == index) return item;
  throw std::runtime_error("row not found: " + section + "/" + row + "/" + index);
}

// ---- criterion 1 -----------------------------------------------------------

bool criterion1(std::string& detail) {
  std::vector<Realization> realizations = enumerate_realizations(seq("4,3,2"));
  if (realizations.size() != 3) {
    detail = "expected 3 realizations, got " + std::to_string(realizations.size());
    return false;
  }
  std::multiset<std::pair<long long, long long>> values, expected{{14, 34}, {14, 32}, {16, 40}};
  for (const Realization& r : realizations)
    values.insert({albertson_index(r.tree), sigma_index(r.tree)});
  if (values != expected) {
    detail = "value multiset differs from {(14,34),(14,32),(16,40)}";
    return false;
  }
  return true;
}

// ---- criterion 2 -----------------------------------------------------------

bool criterion2(std::string& detail) {
  std::vector<Realization> realizations = enumerate_realizations(seq("8,5,4,2"));
  std::map<CanonicalCode, const Realization*> by_code;
  for (const Realization& r : realizations) by_code[r.code] = &r;

  auto lookup = [&](const Tree& t) -> const Realization* {
    auto it = by_code.find(canonical_code(t));
    return it == by_code.end() ? nullptr : it->second;
  };

  struct Placement {
    Tree tree;
    long long irr;
    long long sigma;
  };
  std::vector<Placement> placements;
  placements.push_back({build_caterpillar({8, 4, 2, 5}), 80, 454});
  placements.push_back({build_star(4, {8, 5, 2}), 76, 438});
  placements.push_back({build_star(5, {8, 4, 2}), 74, 422});
  placements.push_back({build_star(8, {5, 4, 2}), 74, 398});

  for (const Placement& p : placements) {
    const Realization* r = lookup(p.tree);
    if (!r) {
      detail = "a depicted placement is missing from the enumeration";
      return false;
    }
    if (albertson_index(r->tree) != p.irr || sigma_index(r->tree) != p.sigma) {
      detail = "placement values differ (irr " + std::to_string(albertson_index(r->tree)) +
               ", sigma " + std::to_string(sigma_index(r->tree)) + ")";
      return false;
    }
  }

  // the depicted caterpillar's sigma must be flagged MISMATCH against the
  // published cell; the suite asserts the flag, not the published number
  nlohmann::json doc = paper_tables_json();
  const auto& erratum = find_row(doc, "k4-placements", "path:8-4-2-5", "sigma");
  if (erratum["oracle"] != 454 || erratum["flag"] != "MISMATCH") {
    detail = "caterpillar sigma row not flagged as a mismatch";
    return false;
  }
  for (const auto& row : doc["rows"]) {
    if (row["section"] != "k4-placements") continue;
    bool is_erratum = row["row"] == "path:8-4-2-5" && row["index"] == "sigma";
    if (!is_erratum && row["flag"] != "MATCH") {
      detail = "unexpected mismatch in the placement table";
      return false;
    }
  }
  return true;
}

// ---- criterion 3 -----------------------------------------------------------

bool criterion3(std::string& detail) {
  ExtremalResult irr = extremal_search(seq("8,5,4,2"), IndexKind::albertson);
  ExtremalResult sigma = extremal_search(seq("8,5,4,2"), IndexKind::sigma);
  if (irr.min_value != 74 || irr.max_value != 80) {
    detail = "irr extrema differ from (74, 80)";
    return false;
  }
  if (sigma.min_value != 398) {
    detail = "sigma minimum differs from 398";
    return false;
  }
  long long oracle_max = 0;
  for (const Realization& r : enumerate_realizations(seq("8,5,4,2")))
    oracle_max = std::max(oracle_max, sigma_index(r.tree));
  if (sigma.max_value != oracle_max || oracle_max != 466) {
    detail = "sigma maximum differs from the oracle value 466";
    return false;
  }
  if (sigma.max_witnesses.size() != 1 ||
      describe_arrangement(sigma.max_witnesses[0]) != "path:8-2-4-5") {
    detail = "sigma maximum witness is not the caterpillar 5-4-2-8";
    return false;
  }

  nlohmann::json doc = paper_tables_json();
  if (find_row(doc, "k4-extremal", "max", "sigma")["flag"] != "MISMATCH") {
    detail = "published sigma maximum not flagged as a mismatch";
    return false;
  }
  if (find_row(doc, "k4-extremal", "min", "sigma")["flag"] != "MATCH") {
    detail = "published sigma minimum unexpectedly flagged";
    return false;
  }
  return true;
}

// ---- criterion 4 -----------------------------------------------------------

bool criterion4(std::string& detail) {
  for (int a = 2; a <= 9; ++a)
    for (int b = 2; b <= a; ++b)
      for (int c = 2; c <= b; ++c) {
        ExtremalResult oracle =
            extremal_search(InternalDegreeSequence::of({a, b, c}), IndexKind::albertson);
        if (k3_irr_min_formula(a, b, c) != oracle.min_value ||
            k3_corrected_irr_max(a, b, c) != oracle.max_value) {
          detail = "formula/oracle split at (" + std::to_string(a) + "," + std::to_string(b) +
                   "," + std::to_string(c) + ")";
          return false;
        }
      }
  if (k3_printed_irr_max(4, 3, 2) != 13 ||
      k3_printed_irr_max(4, 3, 2) ==
          extremal_search(seq("4,3,2"), IndexKind::albertson).max_value) {
    detail = "printed product form fails to disagree at (4,3,2)";
    return false;
  }
  return true;
}

// ---- criterion 5 -----------------------------------------------------------

bool criterion5(std::string& detail) {
  long long sequences = 0;
  for (int a = 2; a <= 12; ++a)
    for (int b = 2; b <= a; ++b)
      for (int c = 2; c <= b; ++c) {
        ++sequences;
        long long at_a = k3_arrangement_irr(a, b, c, K3Middle::a);
        long long at_b = k3_arrangement_irr(a, b, c, K3Middle::b);
        long long at_c = k3_arrangement_irr(a, b, c, K3Middle::c);
        if (at_a != at_b || at_b > at_c) {
          detail = "ordering violated at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
          return false;
        }
      }
  if (sequences != 286) {
    detail = "expected 286 sequences, saw " + std::to_string(sequences);
    return false;
  }
  return true;
}

// ---- criterion 6 -----------------------------------------------------------

bool criterion6(std::string& detail) {
  std::vector<ConjectureReport> reports = sweep_gap_identity(12);
  if (reports.size() != 286) {
    detail = "expected 286 reports, saw " + std::to_string(reports.size());
    return false;
  }
  for (const ConjectureReport& r : reports)
    if (!r.confirmed()) {
      detail = "counterexample: (" + r.sequence.to_string() + ") predicted " +
               std::to_string(r.predicted_gap) + ", oracle " + std::to_string(r.oracle_gap);
      return false;
    }
  return true;
}

// ---- criterion 7 -----------------------------------------------------------

Tree permuted_copy(const Tree& t, std::mt19937& rng) {
  std::vector<int> perm(t.vertex_count());
  for (int i = 0; i < t.vertex_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges()) edges.push_back(make_edge(perm[e.a], perm[e.b]));
  return Tree::build(t.vertex_count(), edges);
}

bool criterion7(std::string& detail) {
  std::vector<InternalDegreeSequence> sequences;
  for (int a = 2; a <= 9; ++a) {
    sequences.push_back(InternalDegreeSequence::of({a}));
    for (int b = 2; b <= a; ++b) {
      sequences.push_back(InternalDegreeSequence::of({a, b}));
      for (int c = 2; c <= b; ++c) sequences.push_back(InternalDegreeSequence::of({a, b, c}));
    }
  }
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= a; ++b)
      for (int c = 2; c <= b; ++c)
        for (int d = 2; d <= c; ++d) sequences.push_back(InternalDegreeSequence::of({a, b, c, d}));
  sequences.push_back(seq("8,5,4,2"));

  std::mt19937 rng(7321);
  long long checked = 0;
  for (const InternalDegreeSequence& s : sequences) {
    for (const Realization& r : enumerate_realizations(s)) {
      ++checked;
      long long irr = albertson_index(r.tree);
      long long sigma = sigma_index(r.tree);
      bool regular = is_adjacency_regular(r.tree);
      if (irr % 2 != 0 || sigma < irr) {
        detail = "parity or dominance failed on " + s.to_string();
        return false;
      }
      if ((sigma == 0) != (irr == 0) || (irr == 0) != regular) {
        detail = "vanishing biconditional failed on " + s.to_string();
        return false;
      }
      Tree shuffled = permuted_copy(r.tree, rng);
      if (canonical_code(shuffled) != r.code || albertson_index(shuffled) != irr ||
          sigma_index(shuffled) != sigma) {
        detail = "relabeling changed an invariant on " + s.to_string();
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " realizations checked";
  return true;
}

// ---- criterion 8 -----------------------------------------------------------

bool criterion8(std::string& detail) {
  long long sequences = 0, prufer_checked = 0;
  for (int a = 2; a <= 6; ++a) {
    std::vector<std::vector<int>> candidates{{a}};
    for (int b = 2; b <= a; ++b) {
      candidates.push_back({a, b});
      for (int c = 2; c <= b; ++c) {
        candidates.push_back({a, b, c});
        for (int d = 2; d <= c; ++d) candidates.push_back({a, b, c, d});
      }
    }
    for (const std::vector<int>& degrees : candidates) {
      ++sequences;
      InternalDegreeSequence s = InternalDegreeSequence::of(degrees);
      long long skeleton_first = count_realizations(s);
      long long census = oracles::free_tree_realization_count(degrees);
      if (skeleton_first != census) {
        detail = "census disagrees on " + s.to_string() + ": " + std::to_string(skeleton_first) +
                 " vs " + std::to_string(census);
        return false;
      }
      if (realization_counts(s).total_vertices <= 9) {
        ++prufer_checked;
        long long labeled = oracles::prufer_filter_count(degrees);
        if (skeleton_first != labeled) {
          detail = "labeled Prufer oracle disagrees on " + s.to_string();
          return false;
        }
      }
    }
  }
  detail = std::to_string(sequences) + " sequences, " + std::to_string(prufer_checked) +
           " also cross-checked against the labeled Prufer oracle";
  return sequences == 125;
}

// ---- criterion 9 -----------------------------------------------------------

#ifndef TREEIRR_CLI_PATH
#define TREEIRR_CLI_PATH ""
#endif

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool criterion9(std::string& detail) {
  std::string cli = TREEIRR_CLI_PATH;
  if (cli.empty() || !std::filesystem::exists(cli)) {
    detail = "cli binary not found";
    return false;
  }
  std::filesystem::path dir = std::filesystem::temp_directory_path();
  auto out_path = [&](int i) { return dir / ("treeirr_det_" + std::to_string(i) + ".txt"); };

  const std::string jobs[] = {
      " enumerate --seq 8,5,4,2 --format json --out ",
      " extremal --seq 8,5,4,2 --index both --check-paper --format table --out ",
  };
  for (const std::string& job : jobs) {
    std::string first, second;
    for (int i = 0; i < 2; ++i) {
      std::string command = "\"" + cli + "\"" + job + out_path(i).string();
      if (std::system(command.c_str()) != 0) {
        detail = "cli run failed";
        return false;
      }
      (i == 0 ? first : second) = read_file(out_path(i));
      std::filesystem::remove(out_path(i));
    }
    if (first.empty() || first != second) {
      detail = "two runs produced different bytes";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run(1, "three-case table for (4,3,2): counts and exact (irr, sigma) cells", criterion1);
  run(2, "(8,5,4,2) placement values with the sigma erratum flagged", criterion2);
  run(3, "(8,5,4,2) extremal summary with the oracle sigma maximum", criterion3);
  run(4, "minimum/corrected-maximum formulas track the oracle up to degree 9", criterion4);
  run(5, "arrangement ordering identity over all 286 sequences up to degree 12", criterion5);
  run(6, "gap identity sweep up to degree 12 finds no counterexample", criterion6);
  run(7, "index properties hold on every enumerated realization", criterion7);
  run(8, "enumeration counts match the independent oracles for k<=4, degrees<=6", criterion8);
  run(9, "repeated cli runs are byte-identical", criterion9);

  std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
