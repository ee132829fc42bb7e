#include "render.hpp"

#include <algorithm>

namespace treeirr::cli {

bool parse_format(const std::string& text, Format& out) {
  if (text == "table") out = Format::table;
  else if (text == "csv") out = Format::csv;
  else if (text == "json") out = Format::json;
  else if (text == "dot") out = Format::dot;
  else return false;
  return true;
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << row[c];
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

void write_dot(std::ostream& out, const Tree& tree, const std::string& name,
               const std::string& label) {
  out << "graph " << name << " {\n";
  if (!label.empty()) out << "  label=\"" << label << "\";\n";
  for (int v = 0; v < tree.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << tree.degree(v) << "\"];\n";
  for (const Edge& e : tree.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
}

}  // namespace treeirr::cli
