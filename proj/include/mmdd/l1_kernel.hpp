#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// L1 distance kernels over dense count vectors. A scalar reference
// implementation is always available; an AVX2 variant is selected at
// runtime when the host supports it. Both compute identical results.
namespace mmdd::kernel {

enum class Backend { scalar, avx2 };

// Best backend the running CPU supports.
Backend detect_backend();

// Currently active backend. Defaults to detect_backend() on first use.
Backend active_backend();

// Force a backend. Throws Error("kernel-unavailable") when the CPU lacks it.
void set_backend(Backend b);

Backend parse_backend(const std::string& name);  // "auto" | "scalar" | "avx2"
std::string backend_name(Backend b);

// Sum of |a[i] - b[i]| for i in [0, n).
std::uint64_t l1_distance(const std::uint32_t* a, const std::uint32_t* b,
                          std::size_t n);

// Early-exit variant: the return value equals the true sum when it is
// below `bound`; otherwise it is some partial sum >= bound. Callers only
// ever compare the result against `bound`, so the exact overshoot does
// not matter.
std::uint64_t l1_distance_bounded(const std::uint32_t* a, const std::uint32_t* b,
                                  std::size_t n, std::uint64_t bound);

// Uniform entry points for testing a specific backend directly.
std::uint64_t l1_distance_scalar(const std::uint32_t* a, const std::uint32_t* b,
                                 std::size_t n);
std::uint64_t l1_distance_bounded_scalar(const std::uint32_t* a,
                                         const std::uint32_t* b, std::size_t n,
                                         std::uint64_t bound);
std::uint64_t l1_distance_avx2(const std::uint32_t* a, const std::uint32_t* b,
                               std::size_t n);
std::uint64_t l1_distance_bounded_avx2(const std::uint32_t* a,
                                       const std::uint32_t* b, std::size_t n,
                                       std::uint64_t bound);

bool avx2_supported();

}  // namespace mmdd::kernel
