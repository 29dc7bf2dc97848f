#include "mmdd/multireal.hpp"

#include <charconv>
#include <cmath>

#include "mmdd/errors.hpp"

namespace mmdd {

std::strong_ordering compare(const MultiReal& a, const MultiReal& b) {
  if (a.value < b.value) return std::strong_ordering::less;
  if (b.value < a.value) return std::strong_ordering::greater;
  if (a.mult < b.mult) return std::strong_ordering::less;
  if (b.mult < a.mult) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

MultiReal operator+(const MultiReal& a, const MultiReal& b) {
  std::uint64_t m = 0;
  if (__builtin_add_overflow(a.mult, b.mult, &m)) {
    throw Error("overflow", "multiplicity sum exceeds 64 bits");
  }
  return {a.value + b.value, m};
}

MultiReal operator*(const MultiReal& a, const MultiReal& b) {
  std::uint64_t m = 0;
  if (__builtin_mul_overflow(a.mult, b.mult, &m)) {
    throw Error("overflow", "multiplicity product exceeds 64 bits");
  }
  return {a.value * b.value, m};
}

MultiReal min_of(std::span<const MultiReal> xs) {
  if (xs.empty()) throw Error("empty-sequence", "min of no multi-reals");
  MultiReal best = xs.front();
  for (const MultiReal& x : xs.subspan(1)) {
    if (x < best) best = x;
  }
  return best;
}

std::string to_string(const MultiReal& x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x.value);
  std::string out = "R";
  out.append(buf, end);
  out += '^';
  out += std::to_string(x.mult);
  return out;
}

MultiReal parse_multireal(std::string_view text) {
  if (text.size() < 4 || text.front() != 'R') {
    throw Error("parse", "bad multi-real literal: " + std::string(text));
  }
  const auto caret = text.find('^');
  if (caret == std::string_view::npos || caret <= 1 || caret + 1 == text.size()) {
    throw Error("parse", "bad multi-real literal: " + std::string(text));
  }
  MultiReal x;
  const char* vfirst = text.data() + 1;
  const char* vlast = text.data() + caret;
  auto vres = std::from_chars(vfirst, vlast, x.value);
  if (vres.ec != std::errc{} || vres.ptr != vlast || !std::isfinite(x.value)) {
    throw Error("parse", "bad multi-real value: " + std::string(text));
  }
  const char* mfirst = text.data() + caret + 1;
  const char* mlast = text.data() + text.size();
  auto mres = std::from_chars(mfirst, mlast, x.mult);
  if (mres.ec != std::errc{} || mres.ptr != mlast) {
    throw Error("parse", "bad multi-real multiplicity: " + std::string(text));
  }
  return x;
}

}  // namespace mmdd
