#include "mmdd/stream.hpp"

#include <utility>

#include "mmdd/errors.hpp"

namespace mmdd {

namespace {

BlockScheme effective_scheme(BlockScheme scheme, const Threshold& eps,
                             const Imbalance& f) {
  if (scheme.kind == BlockScheme::Kind::card_band &&
      (!f.is_abs() || eps.epsilon().value != 0.0)) {
    return BlockScheme::none();
  }
  return scheme;
}

}  // namespace

StreamDetector::StreamDetector(std::size_t window, Threshold eps, Imbalance f,
                               BlockScheme scheme, bool drop_duplicates)
    : window_(window),
      eps_(eps),
      f_(std::move(f)),
      drop_duplicates_(drop_duplicates),
      index_(effective_scheme(scheme, eps, f_), eps.epsilon()) {
  if (window_ == 0) throw Error("zero-window", "window capacity must be >= 1");
}

const Record& StreamDetector::resident(std::size_t seq) const {
  // FIFO eviction keeps resident seqs contiguous, so seq indexes the deque.
  return residents_[seq - residents_.front().first].second;
}

StreamVerdict StreamDetector::process(Record rec) {
  if (resident_ids_.contains(rec.id)) {
    throw Error("id-collision", "id '" + rec.id + "' is already resident");
  }

  StreamVerdict verdict;
  verdict.id = rec.id;
  ++stats_.records;

  // Candidate seqs come back sorted ascending, which is arrival order.
  for (std::size_t seq : index_.candidates(rec)) {
    const Record& other = resident(seq);
    ++stats_.comparisons;
    PruneOutcome o = delta_pruned(rec.attrs, other.attrs, eps_, f_);
    if (o.below) {
      verdict.matches.push_back({other.id, o.delta});
    } else {
      ++stats_.pruned;
    }
  }
  verdict.duplicate = !verdict.matches.empty();
  if (verdict.duplicate) ++stats_.pairs;

  if (!(drop_duplicates_ && verdict.duplicate)) {
    if (residents_.size() == window_) {
      const auto& [old_seq, old_rec] = residents_.front();
      index_.erase(old_seq, old_rec);
      resident_ids_.erase(old_rec.id);
      residents_.pop_front();
    }
    index_.insert(next_seq_, rec);
    resident_ids_.insert(rec.id);
    residents_.emplace_back(next_seq_, std::move(rec));
    ++next_seq_;
  }
  stats_.blocks = index_.block_count();
  return verdict;
}

std::vector<std::string> StreamDetector::resident_ids() const {
  std::vector<std::string> ids;
  ids.reserve(residents_.size());
  for (const auto& [seq, rec] : residents_) ids.push_back(rec.id);
  return ids;
}

}  // namespace mmdd
