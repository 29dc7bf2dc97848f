#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "mmdd/multireal.hpp"
#include "mmdd/multiset.hpp"

namespace mmdd {

// Multiplicity-imbalance function f over count pairs. Must be symmetric with
// f(k,k) = 0 and subadditive, so record deltas obey the triangle inequality.
class Imbalance {
 public:
  static Imbalance abs();

  // min(|k - l|, cap). Subadditivity, symmetry and f(k,k)=0 are checked
  // exhaustively on counts up to check_bound at construction.
  static Imbalance capped(std::uint64_t cap, std::uint64_t check_bound = 32);

  // "abs" | "capped:<c>"
  static Imbalance parse(std::string_view id);

  std::uint64_t operator()(std::uint64_t k, std::uint64_t l) const;
  bool is_abs() const { return kind_ == Kind::abs_diff; }
  std::string name() const;

 private:
  enum class Kind { abs_diff, capped_diff };

  Imbalance(Kind kind, std::uint64_t cap) : kind_(kind), cap_(cap) {}

  Kind kind_ = Kind::abs_diff;
  std::uint64_t cap_ = 0;
};

// Example-1 metric: R0^0 on equal points, else R1^(|i-j|+1).
NonNegMultiReal discrete_distance(const MultiPoint& p, const MultiPoint& q);
NonNegMultiReal discrete_distance(const RealMultiPoint& p, const RealMultiPoint& q);

// Example-2 lift of |x-y|: R_(|x-y|)^(|i-j|).
NonNegMultiReal lifted_distance(const RealMultiPoint& p, const RealMultiPoint& q);

// Elementary count distance R_0^f(k,l). Defined directly on count pairs so
// zero counts (attribute absent from one record) need no multi point.
NonNegMultiReal count_distance(std::uint64_t k, std::uint64_t l, const Imbalance& f);

// Record distance: +-sum of count_distance over the union of supports.
// A pseudometric on records; R0^0 exactly when all counts agree.
NonNegMultiReal record_delta(const Multiset& ti, const Multiset& tj, const Imbalance& f);

// Type-erased multi-metric over text-based multi points, for topology checks.
using MetricFn = std::function<NonNegMultiReal(const MultiPoint&, const MultiPoint&)>;

// "discrete" | "lifted". The lifted metric parses attribute tokens as reals
// and throws Error("non-numeric-attribute") when one does not parse.
MetricFn make_metric(std::string_view id);

}  // namespace mmdd
