#include "mmdd/verify.hpp"

#include <cmath>
#include <random>

#include "mmdd/multimetric.hpp"
#include "mmdd/multireal.hpp"
#include "mmdd/multiset.hpp"

namespace mmdd {

namespace {

// m * 2^e with |m| <= 4095, |e| <= 8. Sums and triple products of these
// stay well inside the 53-bit mantissa, so doubles behave like exact
// rationals throughout the law checks.
double dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mantissa(-4095, 4095);
  std::uniform_int_distribution<int> exponent(-8, 8);
  return std::ldexp(mantissa(rng), exponent(rng));
}

MultiReal random_mr(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mult(0, 1u << 20);
  return {dyadic(rng), mult(rng)};
}

MultiReal nonneg(MultiReal a) {
  a.value = std::fabs(a.value);
  return a;
}

struct Checker {
  LawReport& report;

  void expect(bool ok, const char* law, const MultiReal& a, const MultiReal& b,
              const MultiReal& c) {
    ++report.checks;
    if (ok) return;
    report.failures.push_back(
        {law, "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c)});
  }
};

bool leq(const MultiReal& a, const MultiReal& b) { return compare(a, b) <= 0; }

}  // namespace

LawReport verify_algebra(std::uint64_t trials, std::uint64_t seed) {
  LawReport report;
  Checker check{report};
  std::mt19937_64 rng(seed);
  const MultiReal zero = MultiReal::zero();
  const MultiReal one = MultiReal::one();

  for (std::uint64_t t = 0; t < trials; ++t) {
    const MultiReal a = random_mr(rng);
    const MultiReal b = random_mr(rng);
    const MultiReal c = random_mr(rng);
    ++report.trials;

    check.expect((a + b) + c == a + (b + c), "add-associativity", a, b, c);
    check.expect(a + b == b + a, "add-commutativity", a, b, c);
    check.expect(a + zero == a, "add-identity", a, b, c);
    check.expect((a * b) * c == a * (b * c), "mul-associativity", a, b, c);
    check.expect(a * b == b * a, "mul-commutativity", a, b, c);
    check.expect(a * one == a, "mul-identity", a, b, c);
    check.expect(a * zero == zero, "mul-annihilation", a, b, c);
    check.expect(a * (b + c) == (a * b) + (a * c), "distributivity", a, b, c);

    // Total order: trichotomy against the reverse comparison, transitivity
    // and antisymmetry on the sampled triple.
    const auto ab = compare(a, b);
    const auto ba = compare(b, a);
    check.expect((ab == std::strong_ordering::less && ba == std::strong_ordering::greater) ||
                     (ab == std::strong_ordering::greater && ba == std::strong_ordering::less) ||
                     (ab == std::strong_ordering::equal && ba == std::strong_ordering::equal),
                 "order-antisymmetry", a, b, c);
    check.expect(!(leq(a, b) && leq(b, c)) || leq(a, c), "order-transitivity", a, b, c);
    check.expect(!(leq(a, b) && leq(b, a)) || a == b, "order-equality", a, b, c);

    // Theorem-style compatibility, non-strict: adding any c, or multiplying
    // by a nonnegative c, preserves <=.
    if (leq(a, b)) {
      check.expect(leq(a + c, b + c), "order-add-compatibility", a, b, c);
      const MultiReal cn = nonneg(c);
      check.expect(leq(a * cn, b * cn), "order-mul-compatibility", a, b, cn);
    }

    // Monotone accumulation: partial sums never step backwards when the
    // added term is nonnegative. This is what makes threshold pruning sound.
    const MultiReal step = nonneg(c);
    check.expect(leq(a, a + step), "monotone-accumulation", a, b, step);
  }
  return report;
}

namespace {

MultiPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> base(0, 5);
  std::uniform_int_distribution<Count> mult(1, 9);
  return {std::string(1, static_cast<char>('a' + base(rng))), mult(rng)};
}

RealMultiPoint as_real(const MultiPoint& p) {
  return {static_cast<double>(p.base[0] - 'a'), p.mult};
}

struct MetricChecker {
  LawReport& report;

  void expect(bool ok, const char* law, const MultiPoint& p, const MultiPoint& q,
              const MultiPoint& r) {
    ++report.checks;
    if (ok) return;
    report.failures.push_back({law, "p=" + p.base + "^" + std::to_string(p.mult) +
                                        " q=" + q.base + "^" + std::to_string(q.mult) +
                                        " r=" + r.base + "^" + std::to_string(r.mult)});
  }
};

}  // namespace

LawReport verify_metric_axioms(std::uint64_t trials, std::uint64_t seed) {
  LawReport report;
  MetricChecker check{report};
  std::mt19937_64 rng(seed);

  auto axioms = [&](const char* tag_id, const char* tag_sym, const char* tag_tri,
                    auto&& d, const auto& p, const auto& q, const auto& r,
                    const MultiPoint& sp, const MultiPoint& sq, const MultiPoint& sr) {
    check.expect((d(p, q) == MultiReal::zero()) == (p == q), tag_id, sp, sq, sr);
    check.expect(d(p, q) == d(q, p), tag_sym, sp, sq, sr);
    check.expect(leq(d(p, r), d(p, q) + d(q, r)), tag_tri, sp, sq, sr);
  };

  for (std::uint64_t t = 0; t < trials; ++t) {
    const MultiPoint p = random_point(rng);
    const MultiPoint q = random_point(rng);
    const MultiPoint r = random_point(rng);
    ++report.trials;

    axioms("discrete-identity", "discrete-symmetry", "discrete-triangle",
           [](const MultiPoint& x, const MultiPoint& y) { return discrete_distance(x, y); },
           p, q, r, p, q, r);
    axioms("lifted-identity", "lifted-symmetry", "lifted-triangle",
           [](const RealMultiPoint& x, const RealMultiPoint& y) { return lifted_distance(x, y); },
           as_real(p), as_real(q), as_real(r), p, q, r);
  }
  return report;
}

}  // namespace mmdd
