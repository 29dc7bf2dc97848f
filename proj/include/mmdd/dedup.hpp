#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mmdd/multimetric.hpp"
#include "mmdd/multireal.hpp"
#include "mmdd/multiset.hpp"

// Batch duplicate detection. detect_exhaustive is the quadratic reference
// path; detect_blocked adds blocking, a signature index and threshold
// pruning. With card-band blocking and the abs imbalance the blocked path
// returns exactly the exhaustive result.
namespace mmdd {

struct Record {
  std::string id;
  Multiset attrs;
};

// Dense count vector over a fixed attribute universe, cardinality cached.
struct Signature {
  std::vector<Count> counts;
  std::uint64_t cardinality = 0;
};

// Duplicate threshold; Definition-8 style detection needs eps > R_0^0.
class Threshold {
 public:
  explicit Threshold(NonNegMultiReal eps);
  const NonNegMultiReal& epsilon() const { return eps_; }

 private:
  NonNegMultiReal eps_;
};

struct DuplicatePair {
  std::string left;   // smaller id bytewise
  std::string right;  // larger id bytewise
  NonNegMultiReal delta;
};

bool operator==(const DuplicatePair& a, const DuplicatePair& b);
bool pair_order(const DuplicatePair& a, const DuplicatePair& b);

struct BlockScheme {
  enum class Kind { none, support_hash, card_band };
  Kind kind = Kind::none;
  Count width = 1;  // card_band only

  static BlockScheme none() { return {}; }
  static BlockScheme support_hash() { return {Kind::support_hash, 1}; }
  static BlockScheme card_band(Count width);          // width >= 1
  static BlockScheme parse(const std::string& text);  // none | support | card:<w>
  std::string name() const;
};

// Sorted union of supports across the dataset (bytewise order).
std::vector<std::string> infer_universe(std::span<const Record> d);

// Dense counts in universe order. Throws Error("attribute-outside-universe")
// when the record mentions an attribute the universe lacks.
Signature make_signature(const Record& t, const std::vector<std::string>& universe);

// support_hash: stable hash of the sorted support; card_band: cardinality
// divided by width; none: constant.
std::uint64_t block_key(const Record& t, const BlockScheme& scheme);

// Buckets record slots by block key. Single-writer; reads are concurrent
// once building is done.
class SignatureIndex {
 public:
  SignatureIndex(BlockScheme scheme, NonNegMultiReal eps);

  void insert(std::size_t slot, const Record& rec);
  // Removes a previously inserted slot (rec must be the record inserted
  // under that slot; the key is recomputed from it).
  void erase(std::size_t slot, const Record& rec);
  // Slots that could still be duplicates of rec. For card_band this covers
  // every band intersecting [card - (eps.mult - 1), card + (eps.mult - 1)],
  // a superset of the true duplicates when f = abs.
  std::vector<std::size_t> candidates(const Record& rec) const;
  std::size_t block_count() const { return buckets_.size(); }

 private:
  BlockScheme scheme_;
  NonNegMultiReal eps_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

// Threshold-pruned delta. Terms accumulate in canonical attribute order and
// evaluation stops as soon as the partial sum reaches eps; the accumulated
// sum never decreases, so the below/exceeds decision matches a full
// record_delta evaluation. `delta` is exact only when below.
struct PruneOutcome {
  bool below = false;
  NonNegMultiReal delta;
  std::size_t terms = 0;
};

PruneOutcome delta_pruned(const Multiset& a, const Multiset& b,
                          const Threshold& eps, const Imbalance& f);

struct DetectStats {
  std::uint64_t records = 0;
  std::uint64_t blocks = 0;
  std::uint64_t comparisons = 0;  // candidate pairs evaluated
  std::uint64_t pruned = 0;       // evaluations cut short at the threshold
  std::uint64_t pairs = 0;
};

struct DetectResult {
  std::vector<DuplicatePair> pairs;  // sorted by (left, right)
  DetectStats stats;
};

// Algorithm-style exhaustive scan: full delta for all n(n-1)/2 pairs.
DetectResult detect_exhaustive(std::span<const Record> d, const Threshold& eps,
                               const Imbalance& f);

struct DetectOptions {
  BlockScheme scheme;
  unsigned threads = 1;
  bool use_simd = true;  // dense L1 kernels; only applies when f = abs
};

// Blocked + pruned detection. card_band with a non-abs imbalance or an eps
// with a positive value part silently falls back to scheme none (the band
// bound is only valid for abs with a pure-multiplicity threshold).
DetectResult detect_blocked(std::span<const Record> d, const Threshold& eps,
                            const Imbalance& f, const DetectOptions& opts = {});

}  // namespace mmdd
