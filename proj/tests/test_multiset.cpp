#include <doctest.h>

#include <limits>
#include <random>

#include "helpers.hpp"
#include "mmdd/errors.hpp"
#include "mmdd/multiset.hpp"

using mmdd::Count;
using mmdd::MultiPoint;
using mmdd::Multiset;

namespace {

Multiset ms(const char* text) { return mmdd::parse_multiset(text); }

}  // namespace

TEST_CASE("count returns stored counts and 0 for absent attributes") {
  const Multiset m = ms("{3/a, 2/b, 1/e}");
  CHECK(m.count("a") == 3);
  CHECK(m.count("c") == 0);
  CHECK(Multiset{}.count("a") == 0);
}

TEST_CASE("construction normalizes: sorted, merged, zero-free") {
  const Multiset m = Multiset::from_pairs({{"b", 2}, {"a", 1}, {"b", 3}, {"c", 0}});
  CHECK(mmdd::to_string(m) == "{1/a, 5/b}");
  CHECK(m == ms("{5/b, 1/a}"));

  const std::vector<std::string> tokens{"a", "a", "b"};
  CHECK(mmdd::to_string(Multiset::from_tokens(tokens)) == "{2/a, 1/b}");
}

TEST_CASE("pointwise operations") {
  const Multiset p = ms("{3/a, 2/b}");
  const Multiset q = ms("{1/a, 4/b}");
  CHECK(mset_union(p, q) == ms("{3/a, 4/b}"));
  CHECK(mset_intersection(p, q) == ms("{1/a, 2/b}"));
  CHECK(mset_sum(p, q) == ms("{4/a, 6/b}"));
  CHECK(mset_difference(q, p) == ms("{2/b}"));
  CHECK(mset_difference(p, p) == Multiset{});
}

TEST_CASE("count sums are overflow-checked") {
  const Count big = std::numeric_limits<Count>::max();
  const Multiset m = Multiset::from_pairs({{"a", big}});
  try {
    (void)mset_sum(m, ms("{1/a}"));
    FAIL("expected overflow");
  } catch (const mmdd::Error& e) {
    CHECK(e.code() == "overflow");
  }
}

TEST_CASE("submset and equality") {
  CHECK(is_submset(ms("{1/a}"), ms("{3/a, 2/b}")));
  CHECK_FALSE(is_submset(ms("{4/a}"), ms("{3/a}")));
  CHECK(ms("{2/a}") == ms("{2/a}"));
  CHECK(is_submset(Multiset{}, ms("{1/a}")));
}

TEST_CASE("support and cardinality") {
  const Multiset m = ms("{3/a, 2/b, 1/e}");
  CHECK(m.support() == std::vector<std::string>{"a", "b", "e"});
  CHECK(m.cardinality() == 6);
  CHECK(Multiset{}.cardinality() == 0);
  CHECK(ms("{5/a}").cardinality() == 5);
}

TEST_CASE("complement within a bounded space") {
  const auto space = mmdd::BoundedSpace::make({"a", "b", "c"}, 5);
  CHECK(complement(ms("{3/a, 2/b}"), space) == ms("{2/a, 3/b, 5/c}"));

  const auto small = mmdd::BoundedSpace::make({"a"}, 2);
  CHECK(complement(Multiset{}, small) == ms("{2/a}"));

  // involution
  const Multiset m = ms("{1/a, 5/c}");
  CHECK(complement(complement(m, space), space) == m);

  try {
    (void)complement(ms("{9/a}"), space);
    FAIL("expected out-of-space");
  } catch (const mmdd::Error& e) {
    CHECK(e.code() == "out-of-space");
  }
  CHECK_THROWS_AS(complement(ms("{1/z}"), space), mmdd::Error);
  CHECK_THROWS_AS(mmdd::BoundedSpace::make({}, 3), mmdd::Error);
  CHECK_THROWS_AS(mmdd::BoundedSpace::make({"a"}, 0), mmdd::Error);
}

TEST_CASE("multi point enumeration") {
  const auto pts = multi_points(ms("{2/a, 1/b}"));
  const std::vector<MultiPoint> want{{"a", 1}, {"a", 2}, {"b", 1}};
  CHECK(pts == want);
  CHECK(multi_points(Multiset{}).empty());
  CHECK(multi_points(ms("{3/a}")).size() == 3);
}

TEST_CASE("text form parses back and rejects junk") {
  CHECK(mmdd::to_string(Multiset{}) == "{}");
  CHECK(ms("{}") == Multiset{});
  CHECK(ms("  { 2/a , 1/b }  ") == ms("{2/a, 1/b}"));
  CHECK_THROWS_AS(ms("2/a"), mmdd::Error);
  CHECK_THROWS_AS(ms("{a}"), mmdd::Error);
  CHECK_THROWS_AS(ms("{0/a}"), mmdd::Error);
  CHECK_THROWS_AS(ms("{x/a}"), mmdd::Error);
  CHECK_THROWS_AS(ms("{2/}"), mmdd::Error);
}

TEST_CASE("randomized lattice and cardinality laws") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const Multiset p = testutil::random_mset(rng, 5, 4);
    const Multiset q = testutil::random_mset(rng, 5, 4);
    const Multiset r = testutil::random_mset(rng, 5, 4);

    CHECK(mset_union(p, q) == mset_union(q, p));
    CHECK(mset_intersection(p, q) == mset_intersection(q, p));
    CHECK(mset_union(p, mset_union(q, r)) == mset_union(mset_union(p, q), r));
    CHECK(mset_intersection(p, mset_intersection(q, r)) ==
          mset_intersection(mset_intersection(p, q), r));
    CHECK(mset_union(p, p) == p);
    CHECK(mset_intersection(p, p) == p);
    CHECK(is_submset(mset_intersection(p, q), p));
    CHECK(is_submset(p, mset_union(p, q)));
    CHECK(mset_sum(p, q).cardinality() == p.cardinality() + q.cardinality());
    CHECK(multi_points(p).size() == p.cardinality());
    for (const auto& [attr, c] : mset_difference(p, q).entries()) CHECK(c > 0);
  }
}
