#include "mmdd/multiset.hpp"

#include <algorithm>
#include <charconv>

#include "mmdd/errors.hpp"

namespace mmdd {

namespace {

Count checked_count_add(Count a, Count b) {
  Count s = 0;
  if (__builtin_add_overflow(a, b, &s)) {
    throw Error("overflow", "attribute count exceeds 32 bits");
  }
  return s;
}

}  // namespace

Multiset Multiset::from_pairs(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Multiset m;
  m.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (e.second == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == e.first) {
      m.entries_.back().second = checked_count_add(m.entries_.back().second, e.second);
    } else {
      m.entries_.push_back(std::move(e));
    }
  }
  return m;
}

Multiset Multiset::from_tokens(std::span<const std::string> tokens) {
  std::vector<Entry> entries;
  entries.reserve(tokens.size());
  for (const auto& t : tokens) entries.emplace_back(t, 1);
  return from_pairs(std::move(entries));
}

Count Multiset::count(std::string_view attr) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), attr,
      [](const Entry& e, std::string_view a) { return e.first < a; });
  if (it != entries_.end() && it->first == attr) return it->second;
  return 0;
}

std::uint64_t Multiset::cardinality() const {
  std::uint64_t total = 0;
  for (const auto& [attr, c] : entries_) total += c;
  return total;
}

std::vector<std::string> Multiset::support() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [attr, c] : entries_) out.push_back(attr);
  return out;
}

void merge_counts(const Multiset& p, const Multiset& q,
                  const std::function<void(const std::string&, Count, Count)>& fn) {
  const auto& pe = p.entries();
  const auto& qe = q.entries();
  std::size_t i = 0, j = 0;
  while (i < pe.size() || j < qe.size()) {
    if (j == qe.size() || (i < pe.size() && pe[i].first < qe[j].first)) {
      fn(pe[i].first, pe[i].second, 0);
      ++i;
    } else if (i == pe.size() || qe[j].first < pe[i].first) {
      fn(qe[j].first, 0, qe[j].second);
      ++j;
    } else {
      fn(pe[i].first, pe[i].second, qe[j].second);
      ++i;
      ++j;
    }
  }
}

namespace {

template <class Op>
Multiset pointwise(const Multiset& p, const Multiset& q, Op op) {
  std::vector<Multiset::Entry> entries;
  merge_counts(p, q, [&](const std::string& attr, Count cp, Count cq) {
    Count c = op(cp, cq);
    if (c > 0) entries.emplace_back(attr, c);
  });
  // merge_counts already yields canonical order with no duplicates
  return Multiset::from_pairs(std::move(entries));
}

}  // namespace

Multiset mset_union(const Multiset& p, const Multiset& q) {
  return pointwise(p, q, [](Count a, Count b) { return std::max(a, b); });
}

Multiset mset_intersection(const Multiset& p, const Multiset& q) {
  return pointwise(p, q, [](Count a, Count b) { return std::min(a, b); });
}

Multiset mset_sum(const Multiset& p, const Multiset& q) {
  return pointwise(p, q, checked_count_add);
}

Multiset mset_difference(const Multiset& p, const Multiset& q) {
  return pointwise(p, q, [](Count a, Count b) { return a > b ? a - b : 0; });
}

bool is_submset(const Multiset& p, const Multiset& q) {
  bool ok = true;
  merge_counts(p, q, [&](const std::string&, Count cp, Count cq) {
    if (cp > cq) ok = false;
  });
  return ok;
}

BoundedSpace BoundedSpace::make(std::vector<std::string> universe, Count max_mult) {
  if (universe.empty()) throw Error("invalid-space", "universe must be nonempty");
  if (max_mult == 0) throw Error("invalid-space", "multiplicity cap must be >= 1");
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  return BoundedSpace{std::move(universe), max_mult};
}

bool BoundedSpace::contains(const Multiset& m) const {
  for (const auto& [attr, c] : m.entries()) {
    if (c > max_mult) return false;
    if (!std::binary_search(universe.begin(), universe.end(), attr)) return false;
  }
  return true;
}

Multiset complement(const Multiset& m, const BoundedSpace& space) {
  if (!space.contains(m)) {
    throw Error("out-of-space", "multiset does not belong to the bounded space");
  }
  std::vector<Multiset::Entry> entries;
  entries.reserve(space.universe.size());
  for (const auto& attr : space.universe) {
    Count c = space.max_mult - m.count(attr);
    if (c > 0) entries.emplace_back(attr, c);
  }
  return Multiset::from_pairs(std::move(entries));
}

void for_each_multi_point(const Multiset& m,
                          const std::function<void(const MultiPoint&)>& fn) {
  for (const auto& [attr, c] : m.entries()) {
    for (Count k = 1; k <= c; ++k) fn(MultiPoint{attr, k});
  }
}

std::vector<MultiPoint> multi_points(const Multiset& m) {
  std::vector<MultiPoint> out;
  out.reserve(m.cardinality());
  for_each_multi_point(m, [&](const MultiPoint& p) { out.push_back(p); });
  return out;
}

std::string to_string(const Multiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [attr, c] : m.entries()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(c);
    out += '/';
    out += attr;
  }
  out += '}';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Multiset parse_multiset(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw Error("parse", "bad multiset literal: " + std::string(text));
  }
  s = trim(s.substr(1, s.size() - 2));
  std::vector<Multiset::Entry> entries;
  while (!s.empty()) {
    const auto comma = s.find(',');
    std::string_view item = trim(s.substr(0, comma));
    s = comma == std::string_view::npos ? std::string_view{} : trim(s.substr(comma + 1));
    const auto slash = item.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == item.size()) {
      throw Error("parse", "bad multiset entry: " + std::string(item));
    }
    Count c = 0;
    auto res = std::from_chars(item.data(), item.data() + slash, c);
    if (res.ec != std::errc{} || res.ptr != item.data() + slash || c == 0) {
      throw Error("parse", "bad multiset count: " + std::string(item));
    }
    entries.emplace_back(std::string(item.substr(slash + 1)), c);
  }
  return Multiset::from_pairs(std::move(entries));
}

}  // namespace mmdd
