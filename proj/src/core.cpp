#include "ogt/core.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace ogt {

uint64_t OrientedGraph::in_mask(int v) const {
  uint64_t m = 0;
  for (int u = 0; u < n; ++u)
    if (has_arc(u, v)) m |= uint64_t{1} << u;
  return m;
}

int OrientedGraph::out_degree(int v) const { return std::popcount(out[v]); }

int OrientedGraph::in_degree(int v) const { return std::popcount(in_mask(v)); }

int OrientedGraph::arc_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += out_degree(v);
  return total;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (int u = 0; u < n; ++u)
    for (uint64_t m = out[u]; m; m &= m - 1)
      result.push_back({u, std::countr_zero(m)});
  return result;
}

bool is_valid_oriented(const OrientedGraph& g) {
  if (g.n < 0 || g.n > kMaxVertices) return false;
  if (static_cast<int>(g.out.size()) != g.n) return false;
  for (int v = 0; v < g.n; ++v) {
    if (g.out[v] & ~full_mask(g.n)) return false;
    if (g.has_arc(v, v)) return false;
  }
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_arc(u, v) && g.has_arc(v, u)) return false;
  return true;
}

bool is_complete(const OrientedGraph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!g.has_arc(u, v) && !g.has_arc(v, u)) return false;
  return true;
}

Tournament::Tournament(OrientedGraph g) : OrientedGraph(std::move(g)) {
  if (!is_valid_oriented(*this))
    throw InvalidInput("tournament: not a valid oriented graph");
  if (!is_complete(*this))
    throw InvalidInput("tournament: some vertex pair carries no arc");
}

OrientedGraph make_oriented(int n, const std::vector<Arc>& arcs) {
  if (n < 0 || n > kMaxVertices)
    throw CapExceeded("make_oriented: vertex count must be between 0 and 64");
  OrientedGraph g;
  g.n = n;
  g.out.assign(n, 0);
  for (const Arc& a : arcs) {
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      throw InvalidInput("make_oriented: arc endpoint out of range");
    if (a.source == a.target)
      throw InvalidInput("make_oriented: self-loop");
    if (g.has_arc(a.target, a.source))
      throw InvalidInput("make_oriented: antisymmetry violation (both directions present)");
    g.out[a.source] |= uint64_t{1} << a.target;
  }
  return g;
}

Tournament make_tournament(int n, const std::vector<Arc>& arcs) {
  return Tournament(make_oriented(n, arcs));
}

OrientedGraph reverse(const OrientedGraph& g) {
  OrientedGraph r;
  r.n = g.n;
  r.out.assign(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (uint64_t m = g.out[u]; m; m &= m - 1)
      r.out[std::countr_zero(m)] |= uint64_t{1} << u;
  return r;
}

OrientedGraph induced(const OrientedGraph& g, uint64_t vertex_set) {
  vertex_set &= full_mask(g.n);
  std::vector<int> keep;
  for (uint64_t m = vertex_set; m; m &= m - 1) keep.push_back(std::countr_zero(m));
  OrientedGraph s;
  s.n = static_cast<int>(keep.size());
  s.out.assign(s.n, 0);
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (i != j && g.has_arc(keep[i], keep[j])) s.out[i] |= uint64_t{1} << j;
  return s;
}

std::vector<int> topological_order(const OrientedGraph& g) {
  std::vector<int> indeg(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (uint64_t m = g.out[u]; m; m &= m - 1) ++indeg[std::countr_zero(m)];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(g.n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (uint64_t m = g.out[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != g.n)
    throw CyclicInput("topological_order: input contains a directed cycle");
  return order;
}

bool is_acyclic(const OrientedGraph& g) {
  try {
    topological_order(g);
    return true;
  } catch (const CyclicInput&) {
    return false;
  }
}

int longest_path_order(const OrientedGraph& g) {
  if (g.n == 0) return 0;
  std::vector<int> order = topological_order(g);
  std::vector<int> ending_at(g.n, 1);
  int best = 1;
  for (int v : order) {
    for (uint64_t m = g.out[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      ending_at[w] = std::max(ending_at[w], ending_at[v] + 1);
    }
    best = std::max(best, ending_at[v]);
  }
  for (int v = 0; v < g.n; ++v) best = std::max(best, ending_at[v]);
  return best;
}

namespace {

struct TarjanState {
  const OrientedGraph& g;
  std::vector<int> index, low, comp;
  std::vector<int> stack;
  std::vector<bool> on_stack;
  int next_index = 0, next_comp = 0;

  explicit TarjanState(const OrientedGraph& graph)
      : g(graph), index(graph.n, -1), low(graph.n, 0), comp(graph.n, -1),
        on_stack(graph.n, false) {}

  void visit(int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (uint64_t m = g.out[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
        if (w == v) break;
      }
      ++next_comp;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const OrientedGraph& g) {
  TarjanState t(g);
  for (int v = 0; v < g.n; ++v)
    if (t.index[v] < 0) t.visit(v);

  std::vector<std::vector<int>> members(t.next_comp);
  for (int v = 0; v < g.n; ++v) members[t.comp[v]].push_back(v);

  // Kahn on the condensation, smallest-member tie-break, so the emitted
  // order is deterministic and topological.
  int c = t.next_comp;
  std::vector<uint64_t> cadj(c, 0);
  std::vector<int> cindeg(c, 0);
  for (int u = 0; u < g.n; ++u)
    for (uint64_t m = g.out[u]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      int a = t.comp[u], b = t.comp[w];
      if (a != b && !((cadj[a] >> b) & 1)) {
        cadj[a] |= uint64_t{1} << b;
        ++cindeg[b];
      }
    }
  auto smallest = [&](int comp_id) { return members[comp_id].front(); };
  auto cmp = [&](int a, int b) { return smallest(a) > smallest(b); };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int i = 0; i < c; ++i)
    if (cindeg[i] == 0) ready.push(i);
  std::vector<std::vector<int>> result;
  result.reserve(c);
  while (!ready.empty()) {
    int a = ready.top();
    ready.pop();
    result.push_back(std::move(members[a]));
    for (uint64_t m = cadj[a]; m; m &= m - 1) {
      int b = std::countr_zero(m);
      if (--cindeg[b] == 0) ready.push(b);
    }
  }
  return result;
}

bool is_strongly_connected(const OrientedGraph& g) {
  return g.n > 0 && strongly_connected_components(g).size() == 1;
}

std::vector<int> hamiltonian_path(const Tournament& t) {
  std::vector<int> path;
  path.reserve(t.n);
  for (int v = 0; v < t.n; ++v) {
    size_t pos = 0;
    while (pos < path.size() && t.has_arc(path[pos], v)) ++pos;
    path.insert(path.begin() + static_cast<ptrdiff_t>(pos), v);
  }
  return path;
}

bool validates_as_path(const OrientedGraph& g, const std::vector<int>& order) {
  uint64_t seen = 0;
  for (int v : order) {
    if (v < 0 || v >= g.n) return false;
    if ((seen >> v) & 1) return false;
    seen |= uint64_t{1} << v;
  }
  for (size_t i = 0; i + 1 < order.size(); ++i)
    if (!g.has_arc(order[i], order[i + 1])) return false;
  return true;
}

int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

int64_t count_c3(const Tournament& t) {
  int64_t triples = binomial(t.n, 3);
  for (int v = 0; v < t.n; ++v) triples -= binomial(t.out_degree(v), 2);
  return triples;
}

namespace {

constexpr int kOmegaCap = 24;

// joined[u] = vertices reachable from u or reaching u by a path of length <= 2;
// mid[u][v] = candidate midpoints for the pair (u, v).
struct PairTables {
  std::vector<uint64_t> adj_either;
  std::vector<std::vector<uint64_t>> mid;
};

PairTables pair_tables(const OrientedGraph& g) {
  PairTables t;
  t.adj_either.assign(g.n, 0);
  t.mid.assign(g.n, std::vector<uint64_t>(g.n, 0));
  std::vector<uint64_t> in(g.n);
  for (int v = 0; v < g.n; ++v) in[v] = g.in_mask(v);
  for (int u = 0; u < g.n; ++u) {
    t.adj_either[u] = g.out[u] | in[u];
    for (int v = 0; v < g.n; ++v)
      if (u != v) t.mid[u][v] = (g.out[u] & in[v]) | (g.out[v] & in[u]);
  }
  return t;
}

void clique_dfs(const std::vector<uint64_t>& compat, uint64_t cand, int size, int& best) {
  best = std::max(best, size);
  while (cand) {
    if (size + std::popcount(cand) <= best) return;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    clique_dfs(compat, cand & compat[v], size + 1, best);
  }
}

struct AoSearch {
  const OrientedGraph& g;
  const PairTables& t;
  std::vector<int> chosen;
  int best = 0;

  bool complete_subset_ok(uint64_t s) const {
    for (size_t a = 0; a < chosen.size(); ++a)
      for (size_t b = a + 1; b < chosen.size(); ++b) {
        int u = chosen[a], v = chosen[b];
        if ((t.adj_either[u] >> v) & 1) continue;
        if (!(t.mid[u][v] & s)) return false;
      }
    return true;
  }

  void dfs(int next, uint64_t s) {
    int remaining = g.n - next;
    if (static_cast<int>(chosen.size()) + remaining <= best) return;
    if (next == g.n) {
      if (static_cast<int>(chosen.size()) > best && complete_subset_ok(s))
        best = static_cast<int>(chosen.size());
      return;
    }
    // include `next`: prune pairs whose every potential midpoint is already
    // excluded (midpoints can only be `next`, chosen vertices, or later ones)
    uint64_t future = s | (full_mask(g.n) & ~((uint64_t{1} << (next + 1)) - 1));
    bool feasible = true;
    for (int u : chosen) {
      if ((t.adj_either[u] >> next) & 1) continue;
      if (!(t.mid[u][next] & (future | (uint64_t{1} << next)))) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      chosen.push_back(next);
      dfs(next + 1, s | (uint64_t{1} << next));
      chosen.pop_back();
    }
    dfs(next + 1, s);
  }
};

}  // namespace

int omega_ro(const OrientedGraph& g) {
  if (g.n > kOmegaCap) throw CapExceeded("omega_ro: graph larger than 24 vertices");
  if (g.n == 0) return 0;
  PairTables t = pair_tables(g);
  std::vector<uint64_t> compat(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u != v && (((t.adj_either[u] >> v) & 1) || t.mid[u][v] != 0))
        compat[u] |= uint64_t{1} << v;
  int best = 0;
  clique_dfs(compat, full_mask(g.n), 0, best);
  return best;
}

int omega_ao(const OrientedGraph& g) {
  if (g.n > kOmegaCap) throw CapExceeded("omega_ao: graph larger than 24 vertices");
  if (g.n == 0) return 0;
  PairTables t = pair_tables(g);
  AoSearch search{g, t};
  search.dfs(0, 0);
  return search.best;
}

}  // namespace ogt
