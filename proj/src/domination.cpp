#include "ogt/domination.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ogt/constructions.hpp"
#include "ogt/hom.hpp"

namespace ogt {

std::optional<int> is_dominated(const Tournament& t, uint64_t subset) {
  subset &= full_mask(t.n);
  for (int v = 0; v < t.n; ++v)
    if ((t.out[v] & subset) == subset) return v;
  return std::nullopt;
}

SubsetDominationReport all_k_subsets_dominated(const Tournament& t, int k) {
  if (k < 1) throw InvalidInput("all_k_subsets_dominated: k >= 1 required");
  SubsetDominationReport report;
  if (k > t.n) return report;  // no k-subsets, vacuously dominated
  uint64_t subset = full_mask(k);
  uint64_t limit = full_mask(t.n);
  while (subset <= limit) {
    if (!is_dominated(t, subset)) {
      report.all_dominated = false;
      report.failing_subset = subset;
      return report;
    }
    // Gosper's hack: next mask with k bits set
    uint64_t c = subset & -subset;
    uint64_t r = subset + c;
    if (r == 0) break;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return report;
}

OrientedGraph domination_graph(const Tournament& t) {
  OrientedGraph dom;
  dom.n = t.n;
  dom.out.assign(t.n, 0);
  for (int u = 0; u < t.n; ++u)
    for (uint64_t m = t.out[u]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      uint64_t pair = (uint64_t{1} << u) | (uint64_t{1} << v);
      if (!is_dominated(t, pair)) dom.out[u] |= uint64_t{1} << v;
    }
  return dom;
}

namespace {

std::vector<uint64_t> weak_components(const OrientedGraph& g) {
  std::vector<uint64_t> nbr(g.n);
  for (int v = 0; v < g.n; ++v) nbr[v] = g.out[v] | g.in_mask(v);
  std::vector<uint64_t> comps;
  uint64_t seen = 0;
  for (int v = 0; v < g.n; ++v) {
    if ((seen >> v) & 1) continue;
    uint64_t comp = uint64_t{1} << v;
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t m = frontier; m; m &= m - 1) next |= nbr[std::countr_zero(m)];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

// Lexicographically least (by rank) longest directed path in an acyclic graph.
std::vector<int> longest_path_in(const OrientedGraph& g, uint64_t comp,
                                 const std::vector<int>& rank) {
  std::vector<int> len_from(g.n, 0);
  std::vector<int> order = topological_order(g);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (!((comp >> v) & 1)) continue;
    len_from[v] = 1;
    for (uint64_t m = g.out[v] & comp; m; m &= m - 1)
      len_from[v] = std::max(len_from[v], 1 + len_from[std::countr_zero(m)]);
  }
  int best_len = 0, start = -1;
  for (uint64_t m = comp; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if (len_from[v] > best_len || (len_from[v] == best_len && start >= 0 && rank[v] < rank[start])) {
      best_len = len_from[v];
      start = v;
    }
  }
  std::vector<int> path{start};
  while (static_cast<int>(path.size()) < best_len) {
    int v = path.back(), next = -1;
    for (uint64_t m = g.out[v] & comp; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (len_from[w] == best_len - static_cast<int>(path.size()) &&
          (next < 0 || rank[w] < rank[next]))
        next = w;
    }
    path.push_back(next);
  }
  return path;
}

bool is_caterpillar(const OrientedGraph& g, uint64_t comp, const std::vector<int>& rank,
                    int* spine_len) {
  std::vector<int> spine = longest_path_in(g, comp, rank);
  uint64_t spine_set = 0;
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < spine.size(); ++i) {
    spine_set |= uint64_t{1} << spine[i];
    pos[spine[i]] = static_cast<int>(i);
  }
  for (uint64_t m = comp; m; m &= m - 1) {
    int u = std::countr_zero(m);
    bool on_spine = (spine_set >> u) & 1;
    if (!on_spine) {
      // must be a pendant leaf: no out-arcs, one in-arc from the spine
      if (g.out[u] & comp) return false;
      uint64_t in = g.in_mask(u) & comp;
      if (std::popcount(in) != 1) return false;
      if (!((spine_set >> std::countr_zero(in)) & 1)) return false;
      continue;
    }
    for (uint64_t a = g.out[u] & comp; a; a &= a - 1) {
      int v = std::countr_zero(a);
      if (((spine_set >> v) & 1) && pos[v] != pos[u] + 1) return false;  // spine chord
    }
  }
  *spine_len = static_cast<int>(spine.size());
  return true;
}

}  // namespace

DominationClassification classify_domination(const OrientedGraph& dom_graph,
                                             const std::vector<int>* tie_break) {
  DominationClassification result;
  std::vector<int> rank(dom_graph.n);
  for (int v = 0; v < dom_graph.n; ++v) rank[v] = v;
  if (tie_break) {
    if (static_cast<int>(tie_break->size()) != dom_graph.n)
      throw InvalidInput("classify_domination: tie_break size mismatch");
    for (int r = 0; r < dom_graph.n; ++r) rank[(*tie_break)[r]] = r;
  }

  auto sccs = strongly_connected_components(dom_graph);
  std::vector<uint64_t> big;
  for (const auto& scc : sccs)
    if (scc.size() >= 2) {
      uint64_t m = 0;
      for (int v : scc) m |= uint64_t{1} << v;
      big.push_back(m);
    }

  if (!big.empty()) {
    if (big.size() != 1) return result;  // Other
    uint64_t cycle = big.front();
    int cycle_len = std::popcount(cycle);
    if (cycle_len % 2 == 0) return result;
    for (uint64_t m = cycle; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (std::popcount(dom_graph.out[v] & cycle) != 1) return result;
      if (std::popcount(dom_graph.in_mask(v) & cycle) != 1) return result;
    }
    for (int u = 0; u < dom_graph.n; ++u) {
      if ((cycle >> u) & 1) continue;
      if (dom_graph.out[u] != 0) return result;  // arcs must leave the cycle only
      uint64_t in = dom_graph.in_mask(u);
      if (in == 0) continue;  // isolated vertex
      if (std::popcount(in) != 1 || !((cycle >> std::countr_zero(in)) & 1)) return result;
    }
    result.shape = DominationClassification::Shape::OddCycleWithPendants;
    result.cycle_length = cycle_len;
    return result;
  }

  std::vector<int> spines;
  for (uint64_t comp : weak_components(dom_graph)) {
    int len = 0;
    if (!is_caterpillar(dom_graph, comp, rank, &len)) return result;
    spines.push_back(len);
  }
  result.shape = DominationClassification::Shape::CaterpillarForest;
  result.spine_lengths = std::move(spines);
  return result;
}

bool check_disjoint_arc_dichotomy(const Tournament& t) {
  OrientedGraph dom = domination_graph(t);
  std::vector<Arc> arcs = dom.arcs();
  for (size_t a = 0; a < arcs.size(); ++a)
    for (size_t b = a + 1; b < arcs.size(); ++b) {
      int v = arcs[a].source, w = arcs[a].target;
      int v2 = arcs[b].source, w2 = arcs[b].target;
      if (v == v2 || v == w2 || w == v2 || w == w2) continue;
      bool opt1 = t.has_arc(v, v2) && t.has_arc(v2, w) && t.has_arc(w, w2) && t.has_arc(w2, v);
      bool opt2 = t.has_arc(v, w2) && t.has_arc(w2, w) && t.has_arc(w, v2) && t.has_arc(v2, v);
      if (!opt1 && !opt2) return false;
    }
  return true;
}

bool check_c53_forcing(const Tournament& t) {
  OrientedGraph dom = domination_graph(t);
  std::vector<Arc> arcs = dom.arcs();
  bool premise = false;
  for (size_t a = 0; a < arcs.size() && !premise; ++a)
    for (size_t b = a + 1; b < arcs.size() && !premise; ++b) {
      int v = arcs[a].source, w = arcs[a].target;
      int v2 = arcs[b].source, w2 = arcs[b].target;
      if (v == v2 || v == w2 || w == v2 || w == w2) continue;
      if (!dom.has_arc(v, v2) && !dom.has_arc(v2, v)) premise = true;
    }
  if (!premise) return true;
  return contains_copy(t, power_cycle(5, 3)).has_value();
}

double domination_failure_bound(int n, int k) {
  if (k < 1 || n <= k) throw InvalidInput("domination_failure_bound: requires n > k >= 1");
  double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  double log_term = (n - k) * std::log1p(-std::pow(0.5, k));
  return std::exp(log_choose + log_term);
}

namespace {

// Recursive k-subset walk, structured independently of the Gosper scan above,
// used to re-verify candidates before they are returned.
bool reverify_dominated(const Tournament& t, int k, int from, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == k) {
    for (int v = 0; v < t.n; ++v) {
      bool covers = true;
      for (int x : chosen)
        if (!t.has_arc(v, x)) {
          covers = false;
          break;
        }
      if (covers) return true;
    }
    return false;
  }
  for (int x = from; x < t.n; ++x) {
    chosen.push_back(x);
    if (!reverify_dominated(t, k, x + 1, chosen)) return false;
    chosen.pop_back();
  }
  return true;
}

}  // namespace

std::optional<Tournament> find_k_dominated_tournament(int k, int n, int trials, uint64_t seed) {
  if (n > kMaxVertices) throw CapExceeded("find_k_dominated_tournament: n > 64");
  BitStream bits(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Tournament t = random_tournament(n, bits);
    if (all_k_subsets_dominated(t, k).all_dominated) {
      std::vector<int> chosen;
      if (!reverify_dominated(t, k, 0, chosen))
        throw Error("find_k_dominated_tournament: verification mismatch");
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace ogt
