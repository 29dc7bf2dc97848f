#include <doctest.h>

#include <limits>
#include <vector>

#include "mmdd/errors.hpp"
#include "mmdd/multireal.hpp"
#include "mmdd/verify.hpp"

using mmdd::MultiReal;

TEST_CASE("addition is componentwise") {
  CHECK(MultiReal{2, 3} + MultiReal{5, 1} == MultiReal{7, 4});
  CHECK(MultiReal{-2.5, 7} + MultiReal::zero() == MultiReal{-2.5, 7});
  // the running delta sum from the worked duplicate example
  CHECK(MultiReal{0, 1} + MultiReal{0, 1} + MultiReal{0, 2} == MultiReal{0, 4});
}

TEST_CASE("multiplication is componentwise") {
  CHECK(MultiReal{2, 3} * MultiReal{5, 1} == MultiReal{10, 3});
  CHECK(MultiReal{-2.5, 7} * MultiReal::one() == MultiReal{-2.5, 7});
  CHECK(MultiReal{3, 9} * MultiReal::zero() == MultiReal::zero());
}

TEST_CASE("multiplicity overflow is a checked error") {
  const MultiReal big{0.0, std::numeric_limits<std::uint64_t>::max()};
  CHECK_THROWS_AS((void)(big + MultiReal{0.0, 1}), mmdd::Error);
  CHECK_THROWS_AS((void)(big * MultiReal{0.0, 2}), mmdd::Error);
  try {
    (void)(big + big);
    FAIL("expected overflow");
  } catch (const mmdd::Error& e) {
    CHECK(e.code() == "overflow");
  }
}

TEST_CASE("comparison is lexicographic, value first") {
  CHECK(MultiReal{1, 5} < MultiReal{2, 0});
  CHECK(MultiReal{3, 2} < MultiReal{3, 7});
  CHECK(compare(MultiReal{4, 2}, MultiReal{4, 2}) == std::strong_ordering::equal);
  CHECK(MultiReal{2, 0} > MultiReal{1, 5});
  CHECK(MultiReal{3, 7} >= MultiReal{3, 7});
}

TEST_CASE("min_of picks the lexicographic minimum") {
  const std::vector<MultiReal> xs{{1, 2}, {1, 1}, {2, 0}};
  CHECK(mmdd::min_of(xs) == MultiReal{1, 1});

  const std::vector<MultiReal> single{MultiReal::zero()};
  CHECK(mmdd::min_of(single) == MultiReal::zero());

  const std::vector<MultiReal> dup{{3, 3}, {3, 3}};
  CHECK(mmdd::min_of(dup) == MultiReal{3, 3});

  try {
    (void)mmdd::min_of({});
    FAIL("expected empty-sequence");
  } catch (const mmdd::Error& e) {
    CHECK(e.code() == "empty-sequence");
  }
}

TEST_CASE("text form round-trips") {
  CHECK(mmdd::to_string(MultiReal{0, 4}) == "R0^4");
  CHECK(mmdd::to_string(MultiReal{1, 1}) == "R1^1");
  CHECK(mmdd::parse_multireal("R0^4") == MultiReal{0, 4});
  CHECK(mmdd::parse_multireal("R-2.5^3") == MultiReal{-2.5, 3});
  CHECK(mmdd::parse_multireal(mmdd::to_string(MultiReal{0.1, 12})) ==
        MultiReal{0.1, 12});

  CHECK_THROWS_AS(mmdd::parse_multireal("0^4"), mmdd::Error);
  CHECK_THROWS_AS(mmdd::parse_multireal("R0"), mmdd::Error);
  CHECK_THROWS_AS(mmdd::parse_multireal("R^2"), mmdd::Error);
  CHECK_THROWS_AS(mmdd::parse_multireal("R1^x"), mmdd::Error);
  CHECK_THROWS_AS(mmdd::parse_multireal("R1^-2"), mmdd::Error);
}

TEST_CASE("randomized semiring and order laws hold") {
  const mmdd::LawReport rep = mmdd::verify_algebra(2000, 42);
  CHECK(rep.trials == 2000);
  CHECK(rep.failures.empty());
}
