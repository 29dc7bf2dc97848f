#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmdd {

// Per-attribute occurrence count. Sums across attributes accumulate in 64 bits.
using Count = std::uint32_t;

// A multiset concentrated at one base element with multiplicity k >= 1.
template <class BaseT>
struct BasicMultiPoint {
  BaseT base{};
  Count mult = 1;

  friend bool operator==(const BasicMultiPoint&, const BasicMultiPoint&) = default;
  friend auto operator<=>(const BasicMultiPoint&, const BasicMultiPoint&) = default;
};

using MultiPoint = BasicMultiPoint<std::string>;
using RealMultiPoint = BasicMultiPoint<double>;

// Finite multiset over opaque text attributes. Entries are kept in canonical
// (bytewise ascending) order with strictly positive counts; zero counts are
// normalized away on construction, so equality is representation-independent.
class Multiset {
 public:
  using Entry = std::pair<std::string, Count>;

  Multiset() = default;

  // Sorts, merges duplicate attributes by summing, drops zero counts.
  static Multiset from_pairs(std::vector<Entry> entries);
  static Multiset from_tokens(std::span<const std::string> tokens);

  Count count(std::string_view attr) const;
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  std::uint64_t cardinality() const;
  std::vector<std::string> support() const;

  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::vector<Entry> entries_;
};

Multiset mset_union(const Multiset& p, const Multiset& q);         // pointwise max
Multiset mset_intersection(const Multiset& p, const Multiset& q);  // pointwise min
Multiset mset_sum(const Multiset& p, const Multiset& q);           // pointwise add
Multiset mset_difference(const Multiset& p, const Multiset& q);    // max(C_P - C_Q, 0)

bool is_submset(const Multiset& p, const Multiset& q);  // C_P(x) <= C_Q(x) everywhere

// Walks the union of supports in canonical order.
void merge_counts(const Multiset& p, const Multiset& q,
                  const std::function<void(const std::string&, Count, Count)>& fn);

// All multisets over `universe` with every count <= max_mult.
struct BoundedSpace {
  std::vector<std::string> universe;  // sorted, unique, nonempty
  Count max_mult = 1;

  static BoundedSpace make(std::vector<std::string> universe, Count max_mult);
  bool contains(const Multiset& m) const;
};

// Count at x becomes max_mult - C_M(x) over the whole universe.
// Throws Error("out-of-space") if m does not belong to the space.
Multiset complement(const Multiset& m, const BoundedSpace& space);

// Enumerates {P_x^k : x in support, 1 <= k <= C_M(x)}; exactly cardinality(m)
// points, in canonical order (attribute ascending, multiplicity ascending).
void for_each_multi_point(const Multiset& m,
                          const std::function<void(const MultiPoint&)>& fn);
std::vector<MultiPoint> multi_points(const Multiset& m);

// Canonical text form "{k1/x1, k2/x2, ...}" (attributes must not contain
// ',' or '}' for the parse direction).
std::string to_string(const Multiset& m);
Multiset parse_multiset(std::string_view text);

}  // namespace mmdd
