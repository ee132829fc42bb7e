#include "claims.hpp"

namespace treeirr::cli {

namespace {

constexpr IndexKind kIrr = IndexKind::albertson;
constexpr IndexKind kSigma = IndexKind::sigma;

// Provenance strings are comma-free so they can sit unquoted in CSV cells.
const ValueClaim kValueClaims[] = {
    // the three arrangements of (4,3,2), named by their internal path
    {"4,3,2", "path:4-3-2", kIrr, 14, "three-case table / middle 3"},
    {"4,3,2", "path:4-3-2", kSigma, 34, "three-case table / middle 3"},
    {"4,3,2", "path:3-4-2", kIrr, 14, "three-case table / middle 4"},
    {"4,3,2", "path:3-4-2", kSigma, 32, "three-case table / middle 4"},
    {"4,3,2", "path:4-2-3", kIrr, 16, "three-case table / middle 2"},
    {"4,3,2", "path:4-2-3", kSigma, 40, "three-case table / middle 2"},

    // the (8,5,4,2) placements: the depicted caterpillar plus the three star
    // centers; the sigma cell of the caterpillar row is the known erratum
    {"8,5,4,2", "path:8-4-2-5", kIrr, 80, "placement table / d=2 row"},
    {"8,5,4,2", "path:8-4-2-5", kSigma, 470, "placement table / d=2 row"},
    {"8,5,4,2", "star:4(8-5-2)", kIrr, 76, "placement table / d=4 row"},
    {"8,5,4,2", "star:4(8-5-2)", kSigma, 438, "placement table / d=4 row"},
    {"8,5,4,2", "star:5(8-4-2)", kIrr, 74, "placement table / d=5 row"},
    {"8,5,4,2", "star:5(8-4-2)", kSigma, 422, "placement table / d=5 row"},
    {"8,5,4,2", "star:8(5-4-2)", kIrr, 74, "placement table / d=8 row"},
    {"8,5,4,2", "star:8(5-4-2)", kSigma, 398, "placement table / d=8 row"},
};

const ExtremalClaim kExtremalClaims[] = {
    {"4,3,2", kIrr, false, 14, "three-case table / implied extrema"},
    {"4,3,2", kIrr, true, 16, "three-case table / implied extrema"},
    {"4,3,2", kSigma, false, 32, "three-case table / implied extrema"},
    {"4,3,2", kSigma, true, 40, "three-case table / implied extrema"},
    {"8,5,4,2", kIrr, false, 74, "summary table"},
    {"8,5,4,2", kIrr, true, 80, "summary table"},
    {"8,5,4,2", kSigma, false, 398, "summary table"},
    {"8,5,4,2", kSigma, true, 470, "summary table"},  // oracle says 466
};

}  // namespace

std::span<const ValueClaim> value_claims() { return kValueClaims; }
std::span<const ExtremalClaim> extremal_claims() { return kExtremalClaims; }

}  // namespace treeirr::cli
