#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace isolab::batch {

/// Generator for sample `index` of a run seeded with `seed`. Depends only on
/// the pair, so samples can be evaluated in any order or thread.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

/// Outcome of one sample: empty on success, otherwise a failure message.
using SampleOutcome = std::optional<std::string>;

namespace detail {
template <class F>
SampleOutcome guarded(F& check, std::mt19937_64& rng, std::size_t i) {
  try {
    return check(rng, i);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}
} // namespace detail

/// Reference runner: samples in index order on the calling thread.
template <class F>
std::vector<SampleOutcome> run_serial(std::size_t n, std::uint64_t seed, F check) {
  std::vector<SampleOutcome> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = sample_rng(seed, i);
    out[i] = detail::guarded(check, rng, i);
  }
  return out;
}

/// Same results as run_serial, with samples spread over OpenMP threads.
/// Each result lands in its own slot, so output order never depends on
/// scheduling.
template <class F>
std::vector<SampleOutcome> run_parallel(std::size_t n, std::uint64_t seed, F check) {
  std::vector<SampleOutcome> out(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = detail::guarded(check, rng, static_cast<std::size_t>(i));
  }
  return out;
}

} // namespace isolab::batch
