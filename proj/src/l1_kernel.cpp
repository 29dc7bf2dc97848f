#include "mmdd/l1_kernel.hpp"

#include <atomic>

#include "mmdd/errors.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define MMDD_HAVE_AVX2_BUILD 1
#endif

namespace mmdd::kernel {

std::uint64_t l1_distance_scalar(const std::uint32_t* a, const std::uint32_t* b,
                                 std::size_t n) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  }
  return sum;
}

std::uint64_t l1_distance_bounded_scalar(const std::uint32_t* a,
                                         const std::uint32_t* b, std::size_t n,
                                         std::uint64_t bound) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    if (sum >= bound) return sum;
  }
  return sum;
}

#ifdef MMDD_HAVE_AVX2_BUILD

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

namespace {

// Sum of |a[i]-b[i]| over one 8-lane block, widened to four u64 lanes.
__attribute__((target("avx2"))) inline __m256i block_l1(const std::uint32_t* a,
                                                        const std::uint32_t* b,
                                                        __m256i acc) {
  const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const __m256i diff =
      _mm256_sub_epi32(_mm256_max_epu32(va, vb), _mm256_min_epu32(va, vb));
  const __m256i zero = _mm256_setzero_si256();
  acc = _mm256_add_epi64(acc, _mm256_unpacklo_epi32(diff, zero));
  acc = _mm256_add_epi64(acc, _mm256_unpackhi_epi32(diff, zero));
  return acc;
}

__attribute__((target("avx2"))) inline std::uint64_t reduce_u64(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

__attribute__((target("avx2"))) std::uint64_t l1_distance_avx2(
    const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) acc = block_l1(a + i, b + i, acc);
  std::uint64_t sum = reduce_u64(acc);
  for (; i < n; ++i) sum += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return sum;
}

__attribute__((target("avx2"))) std::uint64_t l1_distance_bounded_avx2(
    const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
    std::uint64_t bound) {
  // The bound check runs once per 32-lane chunk; accumulation is monotone
  // so a late exit only costs extra work, never a wrong comparison.
  std::uint64_t sum = 0;
  std::size_t i = 0;
  while (i + 32 <= n) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t j = 0; j < 4; ++j, i += 8) acc = block_l1(a + i, b + i, acc);
    sum += reduce_u64(acc);
    if (sum >= bound) return sum;
  }
  if (i + 8 <= n) {
    __m256i acc = _mm256_setzero_si256();
    for (; i + 8 <= n; i += 8) acc = block_l1(a + i, b + i, acc);
    sum += reduce_u64(acc);
    if (sum >= bound) return sum;
  }
  for (; i < n; ++i) {
    sum += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    if (sum >= bound) return sum;
  }
  return sum;
}

#else  // no x86 build target

bool avx2_supported() { return false; }

std::uint64_t l1_distance_avx2(const std::uint32_t*, const std::uint32_t*,
                               std::size_t) {
  throw Error("kernel-unavailable", "avx2 kernel not built for this target");
}

std::uint64_t l1_distance_bounded_avx2(const std::uint32_t*, const std::uint32_t*,
                                       std::size_t, std::uint64_t) {
  throw Error("kernel-unavailable", "avx2 kernel not built for this target");
}

#endif

Backend detect_backend() {
  return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

namespace {
std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}
}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) {
    throw Error("kernel-unavailable", "this CPU does not support avx2");
  }
  backend_slot().store(b, std::memory_order_relaxed);
}

Backend parse_backend(const std::string& name) {
  if (name == "auto") return detect_backend();
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") return Backend::avx2;
  throw Error("kernel-unavailable", "unknown kernel '" + name + "'");
}

std::string backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

std::uint64_t l1_distance(const std::uint32_t* a, const std::uint32_t* b,
                          std::size_t n) {
  return active_backend() == Backend::avx2 ? l1_distance_avx2(a, b, n)
                                           : l1_distance_scalar(a, b, n);
}

std::uint64_t l1_distance_bounded(const std::uint32_t* a, const std::uint32_t* b,
                                  std::size_t n, std::uint64_t bound) {
  return active_backend() == Backend::avx2
             ? l1_distance_bounded_avx2(a, b, n, bound)
             : l1_distance_bounded_scalar(a, b, n, bound);
}

}  // namespace mmdd::kernel
