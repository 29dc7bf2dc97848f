#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace mmdd {

// A multi-real number R_a^k: a real value paired with an occurrence count.
// (m(R), +, *) is a commutative semiring; R0^0 and R1^1 are the identities.
// Comparison is lexicographic: value first, multiplicity breaks ties.
struct MultiReal {
  double value = 0.0;
  std::uint64_t mult = 0;

  static constexpr MultiReal zero() { return {0.0, 0}; }
  static constexpr MultiReal one() { return {1.0, 1}; }

  friend bool operator==(const MultiReal&, const MultiReal&) = default;
};

// Values with value >= 0; distances and thresholds live here. Closed under +.
using NonNegMultiReal = MultiReal;

std::strong_ordering compare(const MultiReal& a, const MultiReal& b);

inline bool operator<(const MultiReal& a, const MultiReal& b) {
  return compare(a, b) == std::strong_ordering::less;
}
inline bool operator<=(const MultiReal& a, const MultiReal& b) {
  return compare(a, b) != std::strong_ordering::greater;
}
inline bool operator>(const MultiReal& a, const MultiReal& b) { return b < a; }
inline bool operator>=(const MultiReal& a, const MultiReal& b) { return b <= a; }

// Componentwise sum / product. Throws Error("overflow") if the multiplicity
// would wrap (values follow IEEE double semantics).
MultiReal operator+(const MultiReal& a, const MultiReal& b);
MultiReal operator*(const MultiReal& a, const MultiReal& b);

inline bool is_nonneg(const MultiReal& x) { return x.value >= 0.0; }

// Minimum under the total order. Throws Error("empty-sequence") on empty input.
MultiReal min_of(std::span<const MultiReal> xs);

// Text form "R<value>^<mult>", e.g. "R0^4"; value rendered shortest-round-trip.
std::string to_string(const MultiReal& x);
MultiReal parse_multireal(std::string_view text);

}  // namespace mmdd
