#pragma once

#include <cstdint>

namespace qepi {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for one fuzz trial. Depends only on (base, dim, trial), so a trial can
/// be replayed in isolation and results do not depend on thread scheduling.
constexpr std::uint64_t trial_seed(std::uint64_t base, int dim, std::int64_t trial) noexcept {
  std::uint64_t s = splitmix64(base);
  s = splitmix64(s ^ static_cast<std::uint64_t>(dim));
  return splitmix64(s ^ static_cast<std::uint64_t>(trial));
}

}  // namespace qepi
