#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mmdd/errors.hpp"
#include "mmdd/multimetric.hpp"
#include "mmdd/verify.hpp"

using mmdd::Imbalance;
using mmdd::MultiPoint;
using mmdd::MultiReal;
using mmdd::Multiset;
using mmdd::RealMultiPoint;

TEST_CASE("discrete distance") {
  CHECK(discrete_distance(MultiPoint{"a", 2}, MultiPoint{"a", 2}) == MultiReal::zero());
  CHECK(discrete_distance(MultiPoint{"a", 2}, MultiPoint{"b", 5}) == MultiReal{1, 4});
  CHECK(discrete_distance(MultiPoint{"a", 2}, MultiPoint{"a", 3}) == MultiReal{1, 2});
  // different base, equal multiplicity is still an unequal pair
  CHECK(discrete_distance(MultiPoint{"a", 2}, MultiPoint{"b", 2}) == MultiReal{1, 1});
}

TEST_CASE("lifted distance") {
  CHECK(lifted_distance(RealMultiPoint{1.0, 2}, RealMultiPoint{4.0, 5}) ==
        MultiReal{3, 3});
  CHECK(lifted_distance(RealMultiPoint{2.0, 4}, RealMultiPoint{2.0, 4}) ==
        MultiReal::zero());
  CHECK(lifted_distance(RealMultiPoint{2.0, 1}, RealMultiPoint{2.0, 4}) ==
        MultiReal{0, 3});
}

TEST_CASE("count distance") {
  const Imbalance abs = Imbalance::abs();
  CHECK(count_distance(2, 1, abs) == MultiReal{0, 1});
  CHECK(count_distance(7, 7, abs) == MultiReal::zero());
  CHECK(count_distance(0, 3, abs) == MultiReal{0, 3});
}

TEST_CASE("imbalance functions") {
  const Imbalance capped = Imbalance::capped(2);
  CHECK(capped(0, 5) == 2);
  CHECK(capped(3, 4) == 1);
  CHECK(capped(4, 4) == 0);
  CHECK(capped.name() == "capped:2");
  CHECK_FALSE(capped.is_abs());

  CHECK(Imbalance::parse("abs").is_abs());
  CHECK(Imbalance::parse("capped:3")(0, 9) == 3);
  CHECK_THROWS_AS(Imbalance::parse("median"), mmdd::Error);
  CHECK_THROWS_AS(Imbalance::parse("capped:x"), mmdd::Error);
}

TEST_CASE("record delta on the worked examples") {
  const Imbalance abs = Imbalance::abs();
  const Multiset ti = mmdd::parse_multiset("{2/a1, 1/a2, 3/a3}");
  // per-attribute gaps 1, 1, 1
  CHECK(record_delta(ti, mmdd::parse_multiset("{1/a1, 2/a2, 2/a3}"), abs) ==
        MultiReal{0, 3});
  // per-attribute gaps 1, 1, 2
  CHECK(record_delta(ti, mmdd::parse_multiset("{1/a1, 2/a2, 1/a3}"), abs) ==
        MultiReal{0, 4});

  const Multiset t1 = mmdd::parse_multiset("{2/Bread, 1/Milk, 3/Eggs}");
  const Multiset t2 = mmdd::parse_multiset("{1/Bread, 1/Milk, 3/Eggs}");
  CHECK(record_delta(t1, t2, abs) == MultiReal{0, 1});

  CHECK(record_delta(ti, ti, abs) == MultiReal::zero());

  // disjoint-ish supports: {2/b,1/c} vs {1/a,2/b} -> |0-1|+|2-2|+|1-0|
  CHECK(record_delta(mmdd::parse_multiset("{2/b, 1/c}"),
                     mmdd::parse_multiset("{1/a, 2/b}"), abs) == MultiReal{0, 2});
}

TEST_CASE("record delta is a pseudometric") {
  std::mt19937_64 rng(11);
  const Imbalance abs = Imbalance::abs();
  const Imbalance capped = Imbalance::capped(3);
  for (int t = 0; t < 500; ++t) {
    const Multiset a = testutil::random_mset(rng, 6, 5);
    const Multiset b = testutil::random_mset(rng, 6, 5);
    const Multiset c = testutil::random_mset(rng, 6, 5);
    for (const Imbalance& f : {abs, capped}) {
      CHECK(record_delta(a, a, f) == MultiReal::zero());
      CHECK(record_delta(a, b, f) == record_delta(b, a, f));
      CHECK(record_delta(a, c, f) <= record_delta(a, b, f) + record_delta(b, c, f));
    }
    // with f = abs the delta is exactly the L1 gap between count vectors
    CHECK(record_delta(a, b, abs) ==
          MultiReal{0.0, testutil::naive_abs_delta(a, b)});
  }
}

TEST_CASE("metric axioms hold on random multi points") {
  const mmdd::LawReport rep = mmdd::verify_metric_axioms(2000, 5);
  CHECK(rep.failures.empty());
}

TEST_CASE("metric ids resolve") {
  const mmdd::MetricFn d = mmdd::make_metric("discrete");
  CHECK(d(MultiPoint{"a", 1}, MultiPoint{"a", 1}) == MultiReal::zero());

  const mmdd::MetricFn lifted = mmdd::make_metric("lifted");
  CHECK(lifted(MultiPoint{"1.5", 1}, MultiPoint{"3", 2}) == MultiReal{1.5, 1});
  CHECK_THROWS_AS(lifted(MultiPoint{"bread", 1}, MultiPoint{"1", 1}), mmdd::Error);
  try {
    (void)lifted(MultiPoint{"bread", 1}, MultiPoint{"1", 1});
    FAIL("expected non-numeric-attribute");
  } catch (const mmdd::Error& e) {
    CHECK(e.code() == "non-numeric-attribute");
  }
  CHECK_THROWS_AS(mmdd::make_metric("euclid"), mmdd::Error);
}
