#pragma once

#include <span>

#include "treeirr/indices.hpp"

namespace treeirr::cli {

// Published reference values for the two worked sequences, kept in one place
// so the erratum bookkeeping stays auditable. Cells the oracle contradicts
// are still transcribed as printed; the reports flag them, never "fix" them.

struct ValueClaim {
  const char* sequence;     // "4,3,2"
  const char* arrangement;  // descriptor of the placement, e.g. "path:8-4-2-5"
  IndexKind kind;
  long long claimed;
  const char* provenance;
};

struct ExtremalClaim {
  const char* sequence;
  IndexKind kind;
  bool is_max;
  long long claimed;
  const char* provenance;
};

std::span<const ValueClaim> value_claims();
std::span<const ExtremalClaim> extremal_claims();

}  // namespace treeirr::cli
