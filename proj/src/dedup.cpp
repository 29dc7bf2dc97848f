#include "mmdd/dedup.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <thread>
#include <unordered_set>

#include "mmdd/errors.hpp"
#include "mmdd/l1_kernel.hpp"

namespace mmdd {

Threshold::Threshold(NonNegMultiReal eps) : eps_(eps) {
  if (!(MultiReal::zero() < eps_)) {
    throw Error("epsilon-must-be-positive",
                "duplicate threshold must be greater than R0^0");
  }
}

bool operator==(const DuplicatePair& a, const DuplicatePair& b) {
  return a.left == b.left && a.right == b.right && a.delta.value == b.delta.value &&
         a.delta.mult == b.delta.mult;
}

bool pair_order(const DuplicatePair& a, const DuplicatePair& b) {
  if (a.left != b.left) return a.left < b.left;
  return a.right < b.right;
}

BlockScheme BlockScheme::card_band(Count width) {
  if (width == 0) throw Error("invalid-block", "card band width must be >= 1");
  return {Kind::card_band, width};
}

BlockScheme BlockScheme::parse(const std::string& text) {
  if (text == "none") return none();
  if (text == "support") return support_hash();
  if (text.rfind("card:", 0) == 0) {
    const char* first = text.data() + 5;
    const char* last = text.data() + text.size();
    Count width = 0;
    auto [ptr, ec] = std::from_chars(first, last, width);
    if (ec != std::errc{} || ptr != last) {
      throw Error("invalid-block", "bad card band width in '" + text + "'");
    }
    return card_band(width);
  }
  throw Error("invalid-block", "unknown block scheme '" + text + "'");
}

std::string BlockScheme::name() const {
  switch (kind) {
    case Kind::support_hash:
      return "support";
    case Kind::card_band:
      return "card:" + std::to_string(width);
    default:
      return "none";
  }
}

std::vector<std::string> infer_universe(std::span<const Record> d) {
  std::vector<std::string> universe;
  for (const Record& rec : d) {
    for (const auto& [attr, c] : rec.attrs.entries()) universe.push_back(attr);
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  return universe;
}

Signature make_signature(const Record& t, const std::vector<std::string>& universe) {
  std::unordered_map<std::string_view, std::size_t> pos;
  pos.reserve(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) pos.emplace(universe[i], i);

  Signature sig;
  sig.counts.assign(universe.size(), 0);
  for (const auto& [attr, c] : t.attrs.entries()) {
    auto it = pos.find(attr);
    if (it == pos.end()) {
      throw Error("attribute-outside-universe",
                  "record '" + t.id + "' mentions unknown attribute '" + attr + "'");
    }
    sig.counts[it->second] = c;
    sig.cardinality += c;
  }
  return sig;
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a_append(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  // Unit separator keeps {"ab"} distinct from {"a","b"}.
  h ^= 0x1f;
  h *= kFnvPrime;
  return h;
}

}  // namespace

std::uint64_t block_key(const Record& t, const BlockScheme& scheme) {
  switch (scheme.kind) {
    case BlockScheme::Kind::support_hash: {
      std::uint64_t h = kFnvOffset;
      for (const auto& [attr, c] : t.attrs.entries()) h = fnv1a_append(h, attr);
      return h;
    }
    case BlockScheme::Kind::card_band:
      return t.attrs.cardinality() / scheme.width;
    default:
      return 0;
  }
}

SignatureIndex::SignatureIndex(BlockScheme scheme, NonNegMultiReal eps)
    : scheme_(scheme), eps_(eps) {}

void SignatureIndex::insert(std::size_t slot, const Record& rec) {
  buckets_[block_key(rec, scheme_)].push_back(slot);
}

void SignatureIndex::erase(std::size_t slot, const Record& rec) {
  auto it = buckets_.find(block_key(rec, scheme_));
  if (it == buckets_.end()) return;
  std::erase(it->second, slot);
  if (it->second.empty()) buckets_.erase(it);
}

std::vector<std::size_t> SignatureIndex::candidates(const Record& rec) const {
  std::vector<std::size_t> out;
  if (scheme_.kind != BlockScheme::Kind::card_band) {
    auto it = buckets_.find(block_key(rec, scheme_));
    if (it != buckets_.end()) out = it->second;
    return out;
  }

  // delta.mult >= |cardinality difference| for f = abs, so only records with
  // cardinality within eps.mult - 1 can be duplicates; fetch whole bands
  // covering that range.
  const std::uint64_t card = rec.attrs.cardinality();
  const std::uint64_t slack = eps_.mult > 0 ? eps_.mult - 1 : 0;
  const std::uint64_t lo = card > slack ? card - slack : 0;
  std::uint64_t hi = 0;
  if (__builtin_add_overflow(card, slack, &hi)) {
    hi = std::numeric_limits<std::uint64_t>::max();
  }
  const std::uint64_t lo_band = lo / scheme_.width;
  const std::uint64_t hi_band = hi / scheme_.width;

  if (hi_band - lo_band < buckets_.size()) {
    for (std::uint64_t band = lo_band;; ++band) {
      auto it = buckets_.find(band);
      if (it != buckets_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      if (band == hi_band) break;
    }
  } else {
    for (const auto& [band, slots] : buckets_) {
      if (band >= lo_band && band <= hi_band) {
        out.insert(out.end(), slots.begin(), slots.end());
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PruneOutcome delta_pruned(const Multiset& a, const Multiset& b,
                          const Threshold& eps, const Imbalance& f) {
  PruneOutcome out;
  out.delta = MultiReal::zero();
  bool exceeded = false;
  merge_counts(a, b, [&](const std::string&, Count ci, Count cj) {
    if (exceeded) return;
    out.delta = out.delta + count_distance(ci, cj, f);
    ++out.terms;
    if (!(out.delta < eps.epsilon())) exceeded = true;
  });
  out.below = !exceeded;
  return out;
}

namespace {

void ensure_unique_ids(std::span<const Record> d) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(d.size());
  for (const Record& rec : d) {
    if (!seen.insert(rec.id).second) {
      throw Error("id-collision", "duplicate record id '" + rec.id + "'");
    }
  }
}

DuplicatePair ordered_pair(const Record& a, const Record& b, NonNegMultiReal delta) {
  if (b.id < a.id) return {b.id, a.id, delta};
  return {a.id, b.id, delta};
}

}  // namespace

DetectResult detect_exhaustive(std::span<const Record> d, const Threshold& eps,
                               const Imbalance& f) {
  ensure_unique_ids(d);
  DetectResult res;
  res.stats.records = d.size();
  res.stats.blocks = d.empty() ? 0 : 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      ++res.stats.comparisons;
      NonNegMultiReal delta = record_delta(d[i].attrs, d[j].attrs, f);
      if (delta < eps.epsilon()) res.pairs.push_back(ordered_pair(d[i], d[j], delta));
    }
  }
  std::sort(res.pairs.begin(), res.pairs.end(), pair_order);
  res.stats.pairs = res.pairs.size();
  return res;
}

DetectResult detect_blocked(std::span<const Record> d, const Threshold& eps,
                            const Imbalance& f, const DetectOptions& opts) {
  ensure_unique_ids(d);

  // The band bound only holds for abs with a pure-multiplicity threshold.
  BlockScheme scheme = opts.scheme;
  const bool mult_only = eps.epsilon().value == 0.0;
  if (scheme.kind == BlockScheme::Kind::card_band && (!f.is_abs() || !mult_only)) {
    scheme = BlockScheme::none();
  }

  SignatureIndex index(scheme, eps.epsilon());
  for (std::size_t slot = 0; slot < d.size(); ++slot) index.insert(slot, d[slot]);

  const bool dense = opts.use_simd && f.is_abs() && mult_only;
  std::vector<Signature> sigs;
  if (dense) {
    const std::vector<std::string> universe = infer_universe(d);
    sigs.reserve(d.size());
    for (const Record& rec : d) sigs.push_back(make_signature(rec, universe));
  }

  struct Local {
    std::vector<DuplicatePair> pairs;
    std::uint64_t comparisons = 0;
    std::uint64_t pruned = 0;
  };

  auto scan = [&](std::size_t start, std::size_t stride, Local& local) {
    for (std::size_t i = start; i < d.size(); i += stride) {
      for (std::size_t j : index.candidates(d[i])) {
        if (j >= i) continue;  // each unordered pair exactly once
        ++local.comparisons;
        if (dense) {
          const std::uint64_t sum = kernel::l1_distance_bounded(
              sigs[i].counts.data(), sigs[j].counts.data(), sigs[i].counts.size(),
              eps.epsilon().mult);
          if (sum < eps.epsilon().mult) {
            local.pairs.push_back(
                ordered_pair(d[i], d[j], MultiReal{0.0, sum}));
          } else {
            ++local.pruned;
          }
        } else {
          PruneOutcome o = delta_pruned(d[i].attrs, d[j].attrs, eps, f);
          if (o.below) {
            local.pairs.push_back(ordered_pair(d[i], d[j], o.delta));
          } else {
            ++local.pruned;
          }
        }
      }
    }
  };

  DetectResult res;
  res.stats.records = d.size();
  res.stats.blocks = index.block_count();

  const unsigned threads =
      std::max(1u, std::min<unsigned>(opts.threads,
                                      static_cast<unsigned>(std::max<std::size_t>(d.size(), 1))));
  std::vector<Local> locals(threads);
  if (threads == 1) {
    scan(0, 1, locals[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(scan, t, threads, std::ref(locals[t]));
    }
    for (std::thread& th : pool) th.join();
  }

  for (Local& local : locals) {
    res.stats.comparisons += local.comparisons;
    res.stats.pruned += local.pruned;
    res.pairs.insert(res.pairs.end(), local.pairs.begin(), local.pairs.end());
  }
  std::sort(res.pairs.begin(), res.pairs.end(), pair_order);
  res.stats.pairs = res.pairs.size();
  return res;
}

}  // namespace mmdd
