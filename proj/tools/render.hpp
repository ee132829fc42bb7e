#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "treeirr/tree.hpp"

namespace treeirr::cli {

enum class Format { table, csv, json, dot };

bool parse_format(const std::string& text, Format& out);

/// Aligned plain-text table with a header row.
void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

/// Comma-delimited with a header row; cells are integers, hex codes or
/// comma-free descriptors, so no quoting is needed.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// One `graph name { ... }` block; vertex labels carry the vertex degree.
void write_dot(std::ostream& out, const Tree& tree, const std::string& name,
               const std::string& label);

}  // namespace treeirr::cli
