#pragma once

#include <cstdint>
#include <exception>
#include <random>
#include <vector>

namespace d4shear::par {

/// Serial is the reference path; parallel must give identical results.
enum class Execution { serial, parallel };

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-sample seed from the master seed and the sample index, independent
/// of the worker count.
constexpr std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

inline std::mt19937_64 sample_rng(std::uint64_t master, std::uint64_t index) {
  return std::mt19937_64(sample_seed(master, index));
}

/// Calls f(i) for i in [0, n). Exceptions are rethrown after the loop,
/// lowest index first.
template <class F>
void for_each_index(std::size_t n, Execution exec, F&& f) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Maps f over [0, n) into a vector in index order.
template <class T, class F>
std::vector<T> map_indices(std::size_t n, Execution exec, F&& f) {
  std::vector<T> out(n);
  for_each_index(n, exec, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace d4shear::par
