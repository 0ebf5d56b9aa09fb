#pragma once

#include <cstdint>
#include <random>

namespace eprior {

// splitmix64 — used only to derive well-mixed seeds for substreams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based substream derivation: the engine for (master, stream, counter)
// depends only on those values, so replicates can be dispatched to any thread
// and still reproduce the sequential run bit for bit.
inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t stream,
                                std::uint64_t counter = 0) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64_next(s);
  s ^= stream * 0x9e3779b97f4a7c15ULL;
  std::uint64_t b = splitmix64_next(s);
  s ^= counter * 0xd1342543de82ef95ULL;
  std::uint64_t c = splitmix64_next(s);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
  return std::mt19937_64(seq);
}

// Stream tags, so call sites do not collide on ad hoc constants.
namespace stream {
constexpr std::uint64_t t_congruent = 1;
constexpr std::uint64_t t_shift_up = 2;
constexpr std::uint64_t t_shift_down = 3;
constexpr std::uint64_t pool_null = 4;
constexpr std::uint64_t pool_alt = 5;
constexpr std::uint64_t pool_drift_up = 6;
constexpr std::uint64_t pool_drift_down = 7;
constexpr std::uint64_t final_null = 8;
constexpr std::uint64_t oc_eval = 9;
constexpr std::uint64_t map_fit = 10;
constexpr std::uint64_t gibbs = 11;
constexpr std::uint64_t historical = 12;
}  // namespace stream

}  // namespace eprior
