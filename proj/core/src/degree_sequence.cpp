#include "treeirr/degree_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace treeirr {

namespace {

void validate_entry(long long value) {
  if (value <= 0) raise(errc::non_positive_entry, "degree " + std::to_string(value) + " is not positive");
  if (value == 1) raise(errc::entry_below_two, "degree 1 denotes a leaf; internal degrees are >= 2");
  if (value > std::numeric_limits<int>::max())
    raise(errc::malformed_input, "degree " + std::to_string(value) + " is out of range");
}

}  // namespace

InternalDegreeSequence InternalDegreeSequence::parse(std::string_view text) {
  std::vector<int> degrees;
  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_spaces();
  if (i == text.size()) raise(errc::empty_sequence, "no degrees given");

  while (true) {
    skip_spaces();
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      raise(errc::malformed_input, "expected an integer at position " + std::to_string(i));
    long long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > std::numeric_limits<int>::max())
        raise(errc::malformed_input, "degree value is too large");
      ++i;
    }
    validate_entry(negative ? -value : value);
    degrees.push_back(static_cast<int>(value));
    skip_spaces();
    if (i == text.size()) break;
    if (text[i] != ',')
      raise(errc::malformed_input, std::string("unexpected character '") + text[i] + "'");
    ++i;
  }
  return of(std::move(degrees));
}

InternalDegreeSequence InternalDegreeSequence::of(std::vector<int> degrees) {
  if (degrees.empty()) raise(errc::empty_sequence, "no degrees given");
  for (int d : degrees) validate_entry(d);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return InternalDegreeSequence(std::move(degrees));
}

std::string InternalDegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(degrees_[i]);
  }
  return out;
}

RealizationCounts realization_counts(const InternalDegreeSequence& seq) {
  long long degree_sum = std::accumulate(seq.degrees().begin(), seq.degrees().end(), 0LL);
  long long k = seq.length();
  // Entries >= 2 guarantee leaf_count >= 2 for k >= 2 (and = d_1 for k = 1),
  // so every valid sequence is realizable.
  return RealizationCounts{degree_sum - k + 2, degree_sum - 2 * k + 2};
}

}  // namespace treeirr
