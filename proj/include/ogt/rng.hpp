#pragma once

#include <cstdint>
#include <random>

#include "ogt/core.hpp"

namespace ogt {

// Default seed for every randomized routine in the library; override through
// the API or the CLI --seed flag. Fixed so CI runs reproduce bit-for-bit.
inline constexpr uint64_t kDefaultSeed = 0xD1CE5EEDULL;

// Deterministic bit source: words are drawn from std::mt19937_64 (whose
// output sequence is pinned by the standard) and consumed most significant
// bit first. The seed -> bit stream contract is therefore portable.
class BitStream {
 public:
  explicit BitStream(uint64_t seed) : gen_(seed) {}

  bool bit() {
    if (avail_ == 0) {
      word_ = gen_();
      avail_ = 64;
    }
    --avail_;
    return (word_ >> avail_) & 1;
  }

  // Uniform value in [0, bound) by rejection over the smallest covering
  // power of two; bound >= 1.
  uint32_t uniform(uint32_t bound) {
    if (bound <= 1) return 0;
    int width = 32 - std::countl_zero(bound - 1);
    while (true) {
      uint32_t v = 0;
      for (int i = 0; i < width; ++i) v = (v << 1) | (bit() ? 1u : 0u);
      if (v < bound) return v;
    }
  }

 private:
  std::mt19937_64 gen_;
  uint64_t word_ = 0;
  int avail_ = 0;
};

// Random tournament: one fair coin per pair (i, j) with i < j in
// lexicographic order; bit 1 orients the arc i -> j.
Tournament random_tournament(int n, BitStream& bits);

// Random acyclic oriented graph with out-degree at most `max_out`: arcs only
// run from lower to higher index; vertex i draws an out-degree uniform on
// [0, min(max_out, n-1-i)] and then a uniform subset of that size.
OrientedGraph random_dag(int n, int max_out, BitStream& bits);

// Random acyclic orientation of the k-cycle: one coin per cycle edge,
// resampled until the orientation is not one of the two cyclic ones.
OrientedGraph random_acyclic_cycle_orientation(int k, BitStream& bits);

}  // namespace ogt
