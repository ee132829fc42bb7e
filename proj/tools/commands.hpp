#pragma once

#include <iosfwd>
#include <string>

#include "render.hpp"

namespace treeirr::cli {

enum class IndexSelection { irr, sigma, both };

bool parse_index_selection(const std::string& text, IndexSelection& out);

struct CommandOptions {
  Format format = Format::table;
  int max_internal = 12;  // enumeration guardrail (--max-k)
  bool check_paper = false;
};

// Each command renders to `out`, sends diagnostics to `err`, and returns the
// process exit code. MATCH/MISMATCH flags against the published values are
// informational and never affect the exit code.
int cmd_validate(const std::string& seq_text, std::ostream& out, std::ostream& err);
int cmd_enumerate(const std::string& seq_text, const CommandOptions& options, std::ostream& out,
                  std::ostream& err);
int cmd_extremal(const std::string& seq_text, IndexSelection selection,
                 const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_conjecture(int max_degree, const CommandOptions& options, std::ostream& out,
                   std::ostream& err);
int cmd_paper_tables(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace treeirr::cli
