#include "mmdd/topology.hpp"

#include <algorithm>

#include "mmdd/errors.hpp"

namespace mmdd {

std::vector<MultiPoint> open_ball(const Multiset& m, const MetricFn& d,
                                  const MultiPoint& center,
                                  const NonNegMultiReal& radius) {
  if (center.mult == 0 || m.count(center.base) < center.mult) {
    throw Error("center-not-in-space", "center is not a multi point of the space");
  }
  std::vector<MultiPoint> ball;
  for_each_multi_point(m, [&](const MultiPoint& q) {
    if (d(center, q) < radius) ball.push_back(q);
  });
  return ball;
}

namespace {

bool ball_inside(const Multiset& m, const MetricFn& d, const MultiPoint& center,
                 const NonNegMultiReal& radius,
                 const std::vector<MultiPoint>& sorted_target) {
  bool inside = true;
  for_each_multi_point(m, [&](const MultiPoint& q) {
    if (!inside) return;
    if (d(center, q) < radius &&
        !std::binary_search(sorted_target.begin(), sorted_target.end(), q)) {
      inside = false;
    }
  });
  return inside;
}

}  // namespace

bool is_open(const Multiset& u, const Multiset& m, const MetricFn& d) {
  if (!is_submset(u, m)) {
    throw Error("not-a-submset", "candidate open set must be a submultiset");
  }
  std::vector<MultiPoint> upts = multi_points(u);  // canonical order is sorted
  const std::vector<MultiPoint> mpts = multi_points(m);

  for (const MultiPoint& p : upts) {
    // Candidate radii: the minimal positive radius plus every realized
    // positive distance from p. Balls only change at realized distances.
    std::vector<NonNegMultiReal> radii;
    radii.push_back(MultiReal{0.0, 1});
    for (const MultiPoint& q : mpts) {
      NonNegMultiReal dist = d(p, q);
      if (MultiReal::zero() < dist) radii.push_back(dist);
    }
    bool found = false;
    for (const NonNegMultiReal& r : radii) {
      if (ball_inside(m, d, p, r, upts)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

struct SubmsetSpace {
  std::vector<std::string> attrs;
  std::vector<Count> caps;
  std::vector<std::uint64_t> strides;  // mixed-radix positional weights
  std::uint64_t total = 1;
};

SubmsetSpace make_space(const Multiset& m, std::uint64_t limit) {
  SubmsetSpace s;
  for (const auto& [attr, c] : m.entries()) {
    s.attrs.push_back(attr);
    s.caps.push_back(c);
    if (__builtin_mul_overflow(s.total, static_cast<std::uint64_t>(c) + 1, &s.total) ||
        s.total > limit) {
      throw Error("space-too-large",
                  "submultiset enumeration exceeds limit " + std::to_string(limit));
    }
  }
  s.strides.assign(s.caps.size(), 1);
  for (std::size_t i = s.caps.size(); i-- > 1;) {
    s.strides[i - 1] = s.strides[i] * (static_cast<std::uint64_t>(s.caps[i]) + 1);
  }
  return s;
}

std::vector<Count> decode(const SubmsetSpace& s, std::uint64_t idx) {
  std::vector<Count> digits(s.caps.size(), 0);
  for (std::size_t i = 0; i < s.caps.size(); ++i) {
    digits[i] = static_cast<Count>(idx / s.strides[i]);
    idx %= s.strides[i];
  }
  return digits;
}

Multiset materialize(const SubmsetSpace& s, const std::vector<Count>& digits) {
  std::vector<Multiset::Entry> entries;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] > 0) entries.emplace_back(s.attrs[i], digits[i]);
  }
  return Multiset::from_pairs(std::move(entries));
}

std::uint64_t encode(const SubmsetSpace& s, const std::vector<Count>& digits) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) idx += digits[i] * s.strides[i];
  return idx;
}

}  // namespace

TopologyReport verify_topology(const Multiset& m, const MetricFn& d,
                               std::uint64_t limit) {
  const SubmsetSpace space = make_space(m, limit);

  TopologyReport report;
  report.submset_count = space.total;

  std::vector<char> open_flags(space.total, 0);
  std::vector<std::uint64_t> open_idx;
  for (std::uint64_t idx = 0; idx < space.total; ++idx) {
    if (is_open(materialize(space, decode(space, idx)), m, d)) {
      open_flags[idx] = 1;
      open_idx.push_back(idx);
    }
  }
  report.open_count = open_idx.size();

  auto fail = [&](std::string msg) {
    report.axioms_hold = false;
    report.counterexample = std::move(msg);
    return report;
  };

  // T1: empty set and the whole space are open.
  if (!open_flags[0]) return fail("empty submultiset is not open");
  if (!open_flags[space.total - 1]) return fail(to_string(m) + " is not open");

  // T2/T3: pairwise unions and intersections of open sets stay open.
  for (std::size_t a = 0; a < open_idx.size(); ++a) {
    const auto da = decode(space, open_idx[a]);
    for (std::size_t b = a; b < open_idx.size(); ++b) {
      const auto db = decode(space, open_idx[b]);
      std::vector<Count> uni(da.size()), inter(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) {
        uni[i] = std::max(da[i], db[i]);
        inter[i] = std::min(da[i], db[i]);
      }
      if (!open_flags[encode(space, uni)]) {
        return fail("union of " + to_string(materialize(space, da)) + " and " +
                    to_string(materialize(space, db)) + " is not open");
      }
      if (!open_flags[encode(space, inter)]) {
        return fail("intersection of " + to_string(materialize(space, da)) + " and " +
                    to_string(materialize(space, db)) + " is not open");
      }
    }
  }

  report.axioms_hold = true;
  return report;
}

}  // namespace mmdd
