#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "mmdd/dedup.hpp"
#include "mmdd/multimetric.hpp"

// Sliding-window streaming detector. Each incoming record is compared
// against the candidates among the most recent W residents, flagged, then
// inserted (evicting the oldest resident when the window is full).
namespace mmdd {

struct StreamMatch {
  std::string id;
  NonNegMultiReal delta;
};

struct StreamVerdict {
  std::string id;
  bool duplicate = false;
  std::vector<StreamMatch> matches;  // resident matches in arrival order
};

class StreamDetector {
 public:
  // Throws Error("zero-window") when window is 0. Scheme semantics follow
  // detect_blocked: card_band downgrades to none unless f = abs and the
  // threshold is pure multiplicity.
  StreamDetector(std::size_t window, Threshold eps, Imbalance f,
                 BlockScheme scheme = BlockScheme::card_band(1),
                 bool drop_duplicates = false);

  // Flags rec against the current residents, then inserts it (unless it was
  // flagged and drop_duplicates is on). Throws Error("id-collision") when
  // the id is currently resident; ids may recur once evicted.
  StreamVerdict process(Record rec);

  std::size_t window() const { return window_; }
  std::size_t resident_count() const { return residents_.size(); }
  std::vector<std::string> resident_ids() const;  // oldest first
  const DetectStats& stats() const { return stats_; }

 private:
  const Record& resident(std::size_t seq) const;

  std::size_t window_;
  Threshold eps_;
  Imbalance f_;
  bool drop_duplicates_;
  SignatureIndex index_;
  std::deque<std::pair<std::size_t, Record>> residents_;  // (seq, record), FIFO
  std::unordered_set<std::string> resident_ids_;
  std::size_t next_seq_ = 0;
  DetectStats stats_;
};

}  // namespace mmdd
