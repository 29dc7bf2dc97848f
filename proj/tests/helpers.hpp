#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mmdd/dedup.hpp"

// Test-local generators and naive oracles. The oracles stay deliberately
// dumb (std::map + signed arithmetic) so they share no code path with the
// library under test.
namespace testutil {

inline std::string attr_name(int i) { return "a" + std::to_string(i); }

inline mmdd::Multiset random_mset(std::mt19937_64& rng, int attr_pool,
                                  mmdd::Count max_count) {
  std::uniform_int_distribution<int> n_attrs(0, attr_pool);
  std::uniform_int_distribution<int> pick(0, attr_pool - 1);
  std::uniform_int_distribution<mmdd::Count> count(1, max_count);
  std::vector<mmdd::Multiset::Entry> entries;
  const int n = n_attrs(rng);
  for (int i = 0; i < n; ++i) entries.emplace_back(attr_name(pick(rng)), count(rng));
  return mmdd::Multiset::from_pairs(std::move(entries));
}

inline std::vector<mmdd::Record> random_records(std::mt19937_64& rng, std::size_t n,
                                                int attr_pool, mmdd::Count max_count) {
  std::vector<mmdd::Record> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = "r" + std::to_string(1000 + i);
    out.push_back({std::move(id), random_mset(rng, attr_pool, max_count)});
  }
  return out;
}

// Sum of |C_a(x) - C_b(x)| computed with signed map arithmetic.
inline std::uint64_t naive_abs_delta(const mmdd::Multiset& a, const mmdd::Multiset& b) {
  std::map<std::string, std::int64_t> diff;
  for (const auto& [attr, c] : a.entries()) diff[attr] += c;
  for (const auto& [attr, c] : b.entries()) diff[attr] -= c;
  std::uint64_t sum = 0;
  for (const auto& [attr, v] : diff) sum += static_cast<std::uint64_t>(v < 0 ? -v : v);
  return sum;
}

// Brute-force duplicate pairs under the counts metric with f = abs and a
// pure-multiplicity threshold.
inline std::vector<mmdd::DuplicatePair> naive_pairs(
    const std::vector<mmdd::Record>& d, std::uint64_t eps_mult) {
  std::vector<mmdd::DuplicatePair> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const std::uint64_t sum = naive_abs_delta(d[i].attrs, d[j].attrs);
      if (sum < eps_mult) {
        const bool flip = d[j].id < d[i].id;
        out.push_back({flip ? d[j].id : d[i].id, flip ? d[i].id : d[j].id,
                       mmdd::MultiReal{0.0, sum}});
      }
    }
  }
  std::sort(out.begin(), out.end(), mmdd::pair_order);
  return out;
}

}  // namespace testutil
