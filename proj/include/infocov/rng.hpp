#pragma once

#include <cstdint>

namespace infocov {

// Domain tags keep independent uses of randomness on disjoint streams.
enum class RngDomain : std::uint64_t {
  ic_edge = 1,        // IC coin for the out-edge with this global index
  lt_threshold = 2,   // LT activation threshold of a node
  lt_arc_choice = 3,  // LT live-arc in-edge pick of a node
  trivalency = 4,     // per-edge probability class draw
  seed_shuffle = 5,   // random seed-set selection
  er_edge = 6,        // Erdos-Renyi edge coin
  ba_attach = 7,      // preferential-attachment target draw
};

namespace detail {

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

}  // namespace detail

// Counter-based randomness: every variate is a pure function of
// (master_seed, replication_index, domain, counter). Replications can be
// evaluated in any order and on any number of threads and still observe
// identical values, which is what makes all results reproducible.
struct ReplicationStream {
  std::uint64_t master_seed = 0;
  std::uint64_t replication_index = 0;

  std::uint64_t bits(RngDomain domain, std::uint64_t counter) const {
    using detail::kGamma;
    using detail::mix64;
    std::uint64_t h = mix64(master_seed + kGamma);
    h = mix64(h ^ (replication_index + kGamma));
    h = mix64(h ^ (static_cast<std::uint64_t>(domain) + kGamma));
    return mix64(h ^ (counter + kGamma));
  }

  // Uniform in [0, 1).
  double uniform(RngDomain domain, std::uint64_t counter) const {
    return static_cast<double>(bits(domain, counter) >> 11) * 0x1.0p-53;
  }

  // Uniform in (0, 1]. Used for LT thresholds: a zero-weight in-edge can
  // never activate and a weight-sum of one always does.
  double uniform_open_closed(RngDomain domain, std::uint64_t counter) const {
    return 1.0 - uniform(domain, counter);
  }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(RngDomain domain, std::uint64_t counter, std::uint64_t bound) const {
    return bits(domain, counter) % bound;
  }
};

}  // namespace infocov
