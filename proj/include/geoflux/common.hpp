#pragma once

#include <charconv>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace geoflux {

// Thrown for malformed inputs and violated preconditions; the CLI maps it
// to exit code 1. Anything else escaping a command maps to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Shortest round-trip decimal form, locale-independent. All numeric output
// goes through here so reruns are byte-identical.
inline std::string fmt_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("fmt_double: to_chars failed");
  return std::string(buf, p);
}

// FNV-1a 64-bit, used for input provenance hashes in manifests.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Tasks must be
// independent; callers collect results into index-addressed slots so the
// outcome does not depend on scheduling.
inline void parallel_for(std::size_t n, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(jobs);
  std::size_t per = (n + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    std::size_t lo = t * per;
    std::size_t hi = std::min(n, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, t] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace geoflux
