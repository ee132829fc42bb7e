#pragma once

#include <stdexcept>
#include <string>

namespace treeirr {

enum class errc {
  invalid_vertex_id,
  duplicate_edge,
  not_a_tree,
  empty_sequence,
  malformed_input,
  non_positive_entry,
  entry_below_two,
  not_realizable,
  sequence_too_long,
  degree_below_two,
  center_degree_too_small,
  wrong_arity,
};

// Stable diagnostic name, e.g. errc::entry_below_two -> "EntryBelowTwo".
const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& detail);

}  // namespace treeirr
