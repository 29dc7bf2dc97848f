#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized law suites backing the verify-algebra command. Generated
// values are dyadic rationals with small mantissas so every add/multiply in
// the checks is exact in double precision; law failures are real failures,
// never rounding artifacts.
namespace mmdd {

struct LawFailure {
  std::string law;
  std::string detail;
};

struct LawReport {
  std::uint64_t trials = 0;
  std::uint64_t checks = 0;
  std::vector<LawFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Semiring laws (associativity, commutativity, identities, annihilation,
// distributivity), total-order laws, order compatibility with + and *, and
// the monotone-accumulation property used by pruning.
LawReport verify_algebra(std::uint64_t trials, std::uint64_t seed);

// Identity, symmetry and triangle for the discrete and lifted metrics on
// random multi points.
LawReport verify_metric_axioms(std::uint64_t trials, std::uint64_t seed);

}  // namespace mmdd
