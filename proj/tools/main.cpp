#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace treeirr::cli;

namespace {

struct OutputTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  bool open(const std::string& path, std::ostream& err) {
    if (path.empty()) return true;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) {
      err << "error: cannot open output file '" << path << "'\n";
      return false;
    }
    stream = file.get();
    return true;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irregularity indices over all trees realizing an internal degree sequence"};
  app.require_subcommand(1);

  std::string seq_text, format_text = "table", index_text = "both", out_path;
  int max_degree = 8, max_k = 12;
  bool check_paper = false;
  int exit_code = 0;

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
    if (with_format)
      sub->add_option("--format", format_text, "output format: table, csv, json, dot")
          ->default_str("table");
  };

  auto run = [&](auto&& command) {
    OutputTarget target;
    if (!target.open(out_path, std::cerr)) {
      exit_code = 1;
      return;
    }
    Format format = Format::table;
    if (!parse_format(format_text, format)) {
      std::cerr << "error: unknown format '" << format_text << "'\n";
      exit_code = 1;
      return;
    }
    CommandOptions options{format, max_k, check_paper};
    exit_code = command(options, *target.stream);
  };

  CLI::App* validate = app.add_subcommand("validate", "parse a sequence and print its counts");
  validate->add_option("--seq", seq_text, "comma-separated internal degrees")->required();
  add_common(validate, false);
  validate->callback([&] {
    run([&](const CommandOptions&, std::ostream& out) {
      return cmd_validate(seq_text, out, std::cerr);
    });
  });

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all non-isomorphic realizations");
  enumerate->add_option("--seq", seq_text, "comma-separated internal degrees")->required();
  enumerate->add_option("--max-k", max_k, "guardrail on the number of internal vertices");
  add_common(enumerate, true);
  enumerate->callback([&] {
    run([&](const CommandOptions& options, std::ostream& out) {
      return cmd_enumerate(seq_text, options, out, std::cerr);
    });
  });

  CLI::App* extremal = app.add_subcommand("extremal", "extreme index values with witnesses");
  extremal->add_option("--seq", seq_text, "comma-separated internal degrees")->required();
  extremal->add_option("--index", index_text, "which index: irr, sigma, both")
      ->default_str("both");
  extremal->add_flag("--check-paper", check_paper,
                     "compare against the published claims for the worked sequences");
  extremal->add_option("--max-k", max_k, "guardrail on the number of internal vertices");
  add_common(extremal, true);
  extremal->callback([&] {
    run([&](const CommandOptions& options, std::ostream& out) {
      IndexSelection selection = IndexSelection::both;
      if (!parse_index_selection(index_text, selection)) {
        std::cerr << "error: unknown index '" << index_text << "'\n";
        return 1;
      }
      return cmd_extremal(seq_text, selection, options, out, std::cerr);
    });
  });

  CLI::App* conjecture =
      app.add_subcommand("conjecture", "sweep the gap identity irr_max - irr_min = 2(d2 - d3)");
  conjecture->add_option("--max-degree", max_degree, "largest degree in the sweep")
      ->default_str("8");
  add_common(conjecture, true);
  conjecture->callback([&] {
    run([&](const CommandOptions& options, std::ostream& out) {
      return cmd_conjecture(max_degree, options, out, std::cerr);
    });
  });

  CLI::App* tables = app.add_subcommand(
      "paper-tables", "recompute the published tables and flag each cell MATCH/MISMATCH");
  add_common(tables, true);
  tables->callback([&] {
    run([&](const CommandOptions& options, std::ostream& out) {
      return cmd_paper_tables(options, out, std::cerr);
    });
  });

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
