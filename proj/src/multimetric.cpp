#include "mmdd/multimetric.hpp"

#include <charconv>
#include <cmath>

#include "mmdd/errors.hpp"

namespace mmdd {

namespace {

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

}  // namespace

Imbalance Imbalance::abs() { return Imbalance(Kind::abs_diff, 0); }

Imbalance Imbalance::capped(std::uint64_t cap, std::uint64_t check_bound) {
  Imbalance f(Kind::capped_diff, cap);
  for (std::uint64_t k = 0; k <= check_bound; ++k) {
    if (f(k, k) != 0) throw Error("invalid-imbalance", "f(k,k) != 0");
    for (std::uint64_t l = 0; l <= check_bound; ++l) {
      if (f(k, l) != f(l, k)) throw Error("invalid-imbalance", "f not symmetric");
      for (std::uint64_t m = 0; m <= check_bound; ++m) {
        if (f(k, m) > f(k, l) + f(l, m)) {
          throw Error("invalid-imbalance", "f not subadditive");
        }
      }
    }
  }
  return f;
}

Imbalance Imbalance::parse(std::string_view id) {
  if (id == "abs") return abs();
  constexpr std::string_view prefix = "capped:";
  if (id.substr(0, prefix.size()) == prefix) {
    std::uint64_t cap = 0;
    const char* first = id.data() + prefix.size();
    const char* last = id.data() + id.size();
    auto res = std::from_chars(first, last, cap);
    if (res.ec == std::errc{} && res.ptr == last) return capped(cap);
  }
  throw Error("parse", "unknown imbalance id: " + std::string(id));
}

std::uint64_t Imbalance::operator()(std::uint64_t k, std::uint64_t l) const {
  const std::uint64_t d = abs_diff(k, l);
  return kind_ == Kind::abs_diff ? d : std::min(d, cap_);
}

std::string Imbalance::name() const {
  return kind_ == Kind::abs_diff ? "abs" : "capped:" + std::to_string(cap_);
}

NonNegMultiReal discrete_distance(const MultiPoint& p, const MultiPoint& q) {
  if (p == q) return MultiReal::zero();
  return {1.0, abs_diff(p.mult, q.mult) + 1};
}

NonNegMultiReal discrete_distance(const RealMultiPoint& p, const RealMultiPoint& q) {
  if (p == q) return MultiReal::zero();
  return {1.0, abs_diff(p.mult, q.mult) + 1};
}

NonNegMultiReal lifted_distance(const RealMultiPoint& p, const RealMultiPoint& q) {
  return {std::fabs(p.base - q.base), abs_diff(p.mult, q.mult)};
}

NonNegMultiReal count_distance(std::uint64_t k, std::uint64_t l, const Imbalance& f) {
  return {0.0, f(k, l)};
}

NonNegMultiReal record_delta(const Multiset& ti, const Multiset& tj, const Imbalance& f) {
  MultiReal delta = MultiReal::zero();
  merge_counts(ti, tj, [&](const std::string&, Count ci, Count cj) {
    delta = delta + count_distance(ci, cj, f);
  });
  return delta;
}

namespace {

double parse_real_base(const std::string& token) {
  double x = 0.0;
  const char* last = token.data() + token.size();
  auto res = std::from_chars(token.data(), last, x);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(x)) {
    throw Error("non-numeric-attribute", "lifted metric needs real bases, got: " + token);
  }
  return x;
}

}  // namespace

MetricFn make_metric(std::string_view id) {
  if (id == "discrete") {
    return [](const MultiPoint& p, const MultiPoint& q) { return discrete_distance(p, q); };
  }
  if (id == "lifted") {
    return [](const MultiPoint& p, const MultiPoint& q) {
      return lifted_distance(RealMultiPoint{parse_real_base(p.base), p.mult},
                             RealMultiPoint{parse_real_base(q.base), q.mult});
    };
  }
  throw Error("parse", "unknown metric id: " + std::string(id));
}

}  // namespace mmdd
