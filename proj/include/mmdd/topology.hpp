#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmdd/multimetric.hpp"

namespace mmdd {

// {q in M_pt : d(center, q) < radius}, in canonical multi-point order.
// Throws Error("center-not-in-space") if center is not a multi point of m.
std::vector<MultiPoint> open_ball(const Multiset& m, const MetricFn& d,
                                  const MultiPoint& center,
                                  const NonNegMultiReal& radius);

// U is open in (M,d) iff every point of U_pt has some positive radius whose
// ball stays inside U_pt. On a finite point set only the realized distances
// (plus the minimal positive radius R0^1) can change a ball, so searching
// those radii decides the existential exactly.
// Throws Error("not-a-submset") if u is not a submultiset of m.
bool is_open(const Multiset& u, const Multiset& m, const MetricFn& d);

struct TopologyReport {
  std::uint64_t submset_count = 0;
  std::uint64_t open_count = 0;
  bool axioms_hold = false;
  std::string counterexample;  // empty when axioms_hold
};

// Enumerates every submultiset of m, classifies each with is_open, and checks
// the topology axioms: empty set and m open, pairwise unions of open sets
// open, pairwise intersections of open sets open. Deterministic report; the
// first counterexample in enumeration order is recorded.
// Throws Error("space-too-large") once the submset count would exceed limit.
TopologyReport verify_topology(const Multiset& m, const MetricFn& d,
                               std::uint64_t limit = 100000);

}  // namespace mmdd
