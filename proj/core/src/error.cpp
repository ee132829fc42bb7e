#include "treeirr/error.hpp"

namespace treeirr {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_vertex_id: return "InvalidVertexId";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::not_a_tree: return "NotATree";
    case errc::empty_sequence: return "EmptySequence";
    case errc::malformed_input: return "MalformedInput";
    case errc::non_positive_entry: return "NonPositiveEntry";
    case errc::entry_below_two: return "EntryBelowTwo";
    case errc::not_realizable: return "NotRealizable";
    case errc::sequence_too_long: return "SequenceTooLong";
    case errc::degree_below_two: return "DegreeBelowTwo";
    case errc::center_degree_too_small: return "CenterDegreeTooSmall";
    case errc::wrong_arity: return "WrongArity";
  }
  return "UnknownError";
}

error::error(errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

void raise(errc code, const std::string& detail) { throw error(code, detail); }

}  // namespace treeirr
