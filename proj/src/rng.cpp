#include "ogt/rng.hpp"

#include <algorithm>

namespace ogt {

Tournament random_tournament(int n, BitStream& bits) {
  if (n < 0 || n > kMaxVertices) throw CapExceeded("random_tournament: bad order");
  OrientedGraph g;
  g.n = n;
  g.out.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (bits.bit())
        g.out[i] |= uint64_t{1} << j;
      else
        g.out[j] |= uint64_t{1} << i;
    }
  return Tournament(g);
}

OrientedGraph random_dag(int n, int max_out, BitStream& bits) {
  if (n < 0 || n > kMaxVertices) throw CapExceeded("random_dag: bad order");
  OrientedGraph g;
  g.n = n;
  g.out.assign(n, 0);
  std::vector<int> pool;
  for (int i = 0; i < n; ++i) {
    int avail = n - 1 - i;
    int d = static_cast<int>(bits.uniform(static_cast<uint32_t>(std::min(max_out, avail) + 1)));
    pool.clear();
    for (int j = i + 1; j < n; ++j) pool.push_back(j);
    for (int k = 0; k < d; ++k) {
      // partial Fisher-Yates over the suffix pool
      int pick = k + static_cast<int>(bits.uniform(static_cast<uint32_t>(pool.size() - k)));
      std::swap(pool[k], pool[pick]);
      g.out[i] |= uint64_t{1} << pool[k];
    }
  }
  return g;
}

OrientedGraph random_acyclic_cycle_orientation(int k, BitStream& bits) {
  if (k < 3) throw InvalidInput("random_acyclic_cycle_orientation: k >= 3 required");
  if (k > kMaxVertices) throw CapExceeded("random_acyclic_cycle_orientation: bad order");
  while (true) {
    bool all_fwd = true, all_bwd = true;
    OrientedGraph g;
    g.n = k;
    g.out.assign(k, 0);
    for (int i = 0; i < k; ++i) {
      int j = (i + 1) % k;
      if (bits.bit()) {
        g.out[i] |= uint64_t{1} << j;
        all_bwd = false;
      } else {
        g.out[j] |= uint64_t{1} << i;
        all_fwd = false;
      }
    }
    if (!all_fwd && !all_bwd) return g;
  }
}

}  // namespace ogt
