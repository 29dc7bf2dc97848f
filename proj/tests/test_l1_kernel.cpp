#include <doctest.h>

#include <limits>
#include <random>
#include <vector>

#include "mmdd/errors.hpp"
#include "mmdd/l1_kernel.hpp"

namespace kernel = mmdd::kernel;

namespace {

std::vector<std::uint32_t> random_counts(std::mt19937_64& rng, std::size_t n,
                                         std::uint32_t max) {
  std::uniform_int_distribution<std::uint32_t> d(0, max);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernel on known vectors") {
  const std::uint32_t a[] = {2, 1, 3};
  const std::uint32_t b[] = {1, 2, 2};
  CHECK(kernel::l1_distance_scalar(a, b, 3) == 3);
  CHECK(kernel::l1_distance_scalar(a, a, 3) == 0);
  CHECK(kernel::l1_distance_scalar(a, b, 0) == 0);

  const std::uint32_t max = std::numeric_limits<std::uint32_t>::max();
  const std::uint32_t hi[] = {max, max};
  const std::uint32_t lo[] = {0, 0};
  CHECK(kernel::l1_distance_scalar(hi, lo, 2) == 2ull * max);
}

TEST_CASE("bounded kernel matches the unbounded decision") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng() % 64);
    const auto a = random_counts(rng, n, 9);
    const auto b = random_counts(rng, n, 9);
    const std::uint64_t exact = kernel::l1_distance_scalar(a.data(), b.data(), n);
    const std::uint64_t bound = 1 + rng() % 40;
    const std::uint64_t got =
        kernel::l1_distance_bounded_scalar(a.data(), b.data(), n, bound);
    CHECK((got >= bound) == (exact >= bound));
    if (got < bound) CHECK(got == exact);
  }
}

TEST_CASE("avx2 kernel agrees with scalar across shapes" *
          doctest::skip(!kernel::avx2_supported())) {
  std::mt19937_64 rng(17);
  const std::uint32_t max = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t n : {0, 1, 7, 8, 9, 31, 32, 33, 100, 1000}) {
    for (int rep = 0; rep < 20; ++rep) {
      auto a = random_counts(rng, n, rep % 2 ? 9 : max);
      auto b = random_counts(rng, n, rep % 2 ? 9 : max);
      const std::uint64_t want = kernel::l1_distance_scalar(a.data(), b.data(), n);
      CHECK(kernel::l1_distance_avx2(a.data(), b.data(), n) == want);

      const std::uint64_t bound = 1 + rng() % (want + 8);
      const std::uint64_t got =
          kernel::l1_distance_bounded_avx2(a.data(), b.data(), n, bound);
      CHECK((got >= bound) == (want >= bound));
      if (got < bound) CHECK(got == want);
    }
  }
}

TEST_CASE("backend selection") {
  const kernel::Backend initial = kernel::active_backend();

  kernel::set_backend(kernel::Backend::scalar);
  CHECK(kernel::active_backend() == kernel::Backend::scalar);

  const std::uint32_t a[] = {4, 0, 4, 0, 4, 0, 4, 0, 4};
  const std::uint32_t b[] = {0, 4, 0, 4, 0, 4, 0, 4, 0};
  CHECK(kernel::l1_distance(a, b, 9) == 36);

  if (kernel::avx2_supported()) {
    kernel::set_backend(kernel::Backend::avx2);
    CHECK(kernel::active_backend() == kernel::Backend::avx2);
    CHECK(kernel::l1_distance(a, b, 9) == 36);
    CHECK(kernel::l1_distance_bounded(a, b, 9, 10) >= 10);
  } else {
    CHECK_THROWS_AS(kernel::set_backend(kernel::Backend::avx2), mmdd::Error);
  }

  CHECK(kernel::parse_backend("scalar") == kernel::Backend::scalar);
  CHECK(kernel::parse_backend("auto") == kernel::detect_backend());
  CHECK_THROWS_AS(kernel::parse_backend("sse9"), mmdd::Error);
  CHECK(kernel::backend_name(kernel::Backend::scalar) == "scalar");

  kernel::set_backend(initial);
}
