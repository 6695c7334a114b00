#include "ogt/constructions.hpp"

#include <numeric>

namespace ogt {

namespace {

void check_order(int k, int lo, const char* what) {
  if (k < lo) throw InvalidInput(std::string(what) + ": order too small");
  if (k > kMaxVertices) throw CapExceeded(std::string(what) + ": more than 64 vertices");
}

Tournament reverse_arc(const Tournament& t, int u, int v) {
  if (!t.has_arc(u, v)) throw InvalidInput("reverse_arc: arc not present");
  OrientedGraph g = t;
  g.out[u] &= ~(uint64_t{1} << v);
  g.out[v] |= uint64_t{1} << u;
  return Tournament(g);
}

}  // namespace

Tournament transitive_tournament(int k) {
  check_order(k, 0, "transitive_tournament");
  OrientedGraph g;
  g.n = k;
  g.out.assign(k, 0);
  for (int i = 0; i < k; ++i) g.out[i] = full_mask(k) & ~full_mask(i + 1);
  return Tournament(g);
}

OrientedGraph directed_path(int k) {
  check_order(k, 1, "directed_path");
  OrientedGraph g;
  g.n = k;
  g.out.assign(k, 0);
  for (int i = 0; i + 1 < k; ++i) g.out[i] = uint64_t{1} << (i + 1);
  return g;
}

OrientedGraph directed_cycle(int k) {
  check_order(k, 3, "directed_cycle");
  OrientedGraph g;
  g.n = k;
  g.out.assign(k, 0);
  for (int i = 0; i < k; ++i) g.out[i] = uint64_t{1} << ((i + 1) % k);
  return g;
}

OrientedGraph bipartite_oriented(int s, int t) {
  if (s < 1 || t < 1) throw InvalidInput("bipartite_oriented: parts must be nonempty");
  if (s + t > kMaxVertices) throw CapExceeded("bipartite_oriented: more than 64 vertices");
  OrientedGraph g;
  g.n = s + t;
  g.out.assign(g.n, 0);
  uint64_t sinks = full_mask(s + t) & ~full_mask(s);
  for (int i = 0; i < s; ++i) g.out[i] = sinks;
  return g;
}

OrientedGraph power_path(int k, int ell) {
  if (ell < 2 || ell >= k) throw InvalidInput("power_path: requires 2 <= l < k");
  check_order(k, 3, "power_path");
  OrientedGraph g;
  g.n = k;
  g.out.assign(k, 0);
  for (int i = 0; i + 1 < k; ++i) g.out[i] |= uint64_t{1} << (i + 1);
  for (int i = 0; i + ell < k; ++i) g.out[i] |= uint64_t{1} << (i + ell);
  return g;
}

OrientedGraph power_cycle(int k, int ell) {
  if (ell < 2 || ell >= k) throw InvalidInput("power_cycle: requires 2 <= l < k");
  check_order(k, 3, "power_cycle");
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) {
    int a = (i + 1) % k, b = (i + ell) % k;
    arcs.push_back({i, a});
    if (b != a) arcs.push_back({i, b});
  }
  // make_oriented rejects the configurations where a step-l arc meets the
  // reversed step-1 arc (e.g. k=3, l=2).
  return make_oriented(k, arcs);
}

OrientedGraph composition(const OrientedGraph& g, const OrientedGraph& h) {
  if (g.n * h.n > kMaxVertices) throw CapExceeded("composition: more than 64 vertices");
  OrientedGraph r;
  r.n = g.n * h.n;
  r.out.assign(r.n, 0);
  uint64_t hmask = full_mask(h.n);
  for (int i = 0; i < g.n; ++i) {
    uint64_t row = 0;
    for (uint64_t m = g.out[i]; m; m &= m - 1) row |= hmask << (std::countr_zero(m) * h.n);
    for (int a = 0; a < h.n; ++a) r.out[i * h.n + a] = row | (h.out[a] << (i * h.n));
  }
  return r;
}

OrientedGraph arrow_join(const OrientedGraph& g, const OrientedGraph& h) {
  if (g.n + h.n > kMaxVertices) throw CapExceeded("arrow_join: more than 64 vertices");
  OrientedGraph r;
  r.n = g.n + h.n;
  r.out.assign(r.n, 0);
  uint64_t right = full_mask(r.n) & ~full_mask(g.n);
  for (int i = 0; i < g.n; ++i) r.out[i] = g.out[i] | right;
  for (int a = 0; a < h.n; ++a) r.out[g.n + a] = h.out[a] << g.n;
  return r;
}

OrientedGraph blow_up(const OrientedGraph& g, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != g.n)
    throw InvalidInput("blow_up: one size per vertex required");
  int total = 0;
  for (int s : sizes) {
    if (s < 1) throw InvalidInput("blow_up: zero part size");
    total += s;
  }
  if (total > kMaxVertices) throw CapExceeded("blow_up: more than 64 vertices");
  std::vector<int> offset(g.n + 1, 0);
  for (int v = 0; v < g.n; ++v) offset[v + 1] = offset[v] + sizes[v];
  OrientedGraph r;
  r.n = total;
  r.out.assign(total, 0);
  for (int v = 0; v < g.n; ++v) {
    uint64_t row = 0;
    for (uint64_t m = g.out[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      row |= (full_mask(sizes[w])) << offset[w];
    }
    for (int a = 0; a < sizes[v]; ++a) r.out[offset[v] + a] = row;
  }
  return r;
}

Tournament flip_vertex(const Tournament& t, int v) {
  if (v < 0 || v >= t.n) throw InvalidInput("flip_vertex: vertex out of range");
  OrientedGraph g = t;
  uint64_t vbit = uint64_t{1} << v;
  uint64_t old_out = g.out[v];
  uint64_t new_out = 0;
  for (int u = 0; u < t.n; ++u) {
    if (u == v) continue;
    if (g.out[u] & vbit) {
      g.out[u] &= ~vbit;  // u -> v becomes v -> u
      new_out |= uint64_t{1} << u;
    }
  }
  for (uint64_t m = old_out; m; m &= m - 1) g.out[std::countr_zero(m)] |= vbit;
  g.out[v] = new_out;
  return Tournament(g);
}

Tournament tilde_t7() {
  OrientedGraph g = transitive_tournament(7);
  // Detach vertex 6 from the transitive pattern and give it N+ = {0, 1, 3}.
  for (int i = 0; i < 6; ++i) g.out[i] &= ~(uint64_t{1} << 6);
  g.out[6] = 0b0001011;
  for (int i : {2, 4, 5}) g.out[i] |= uint64_t{1} << 6;
  return Tournament(g);
}

Tournament special_t(SpecialT which) {
  switch (which) {
    case SpecialT::A:
      return reverse_arc(Tournament(power_cycle(5, 3)), 0, 3);  // w_1 w_4
    case SpecialT::B:
      return reverse_arc(Tournament(power_cycle(5, 2)), 3, 0);  // w_1 w_4
    case SpecialT::C:
      return reverse_arc(transitive_tournament(5), 0, 4);  // source-sink arc
    case SpecialT::D:
      return reverse_arc(special_t(SpecialT::C), 2, 4);  // w_3 w_5
    case SpecialT::E:
      return reverse_arc(special_t(SpecialT::C), 1, 3);  // w_2 w_4
  }
  throw InvalidInput("special_t: unknown tournament");
}

std::vector<Tournament> special_t_all() {
  return {special_t(SpecialT::A), special_t(SpecialT::B), special_t(SpecialT::C),
          special_t(SpecialT::D), special_t(SpecialT::E)};
}

Tournament rotational_11() {
  OrientedGraph g;
  g.n = 11;
  g.out.assign(11, 0);
  for (int i = 0; i < 11; ++i)
    for (int j : {1, 3, 4, 5, 9}) g.out[i] |= uint64_t{1} << ((i + j) % 11);
  return Tournament(g);
}

OrientedGraph knn_orientation(int n) {
  if (n < 1) throw InvalidInput("knn_orientation: n must be positive");
  if (n > 32) throw CapExceeded("knn_orientation: n must be at most 32");
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j >= i)
        arcs.push_back({i - 1, n + j - 1});
      else
        arcs.push_back({n + j - 1, i - 1});
    }
  return make_oriented(2 * n, arcs);
}

}  // namespace ogt
