#include "ogt/hom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ogt/domination.hpp"

namespace ogt {

bool is_homomorphism(const Homomorphism& f, const OrientedGraph& h, const OrientedGraph& t) {
  if (f.source_size != h.n || f.target_size != t.n) return false;
  if (static_cast<int>(f.map.size()) != h.n) return false;
  for (int v : f.map)
    if (v < 0 || v >= t.n) return false;
  for (int u = 0; u < h.n; ++u)
    for (uint64_t m = h.out[u]; m; m &= m - 1)
      if (!t.has_arc(f.map[u], f.map[std::countr_zero(m)])) return false;
  return true;
}

bool is_injective(const Homomorphism& f) {
  uint64_t seen = 0;
  for (int v : f.map) {
    uint64_t bit = uint64_t{1} << v;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

namespace {

// Variable order: topological for acyclic sources; otherwise max-degree-first
// seeded, then greedily preferring vertices with the most already-ordered
// neighbors (ties by degree, then index) so domains stay constrained.
std::vector<int> variable_order(const OrientedGraph& h) {
  if (is_acyclic(h)) return topological_order(h);
  std::vector<uint64_t> nbr(h.n);
  std::vector<int> deg(h.n);
  for (int v = 0; v < h.n; ++v) {
    nbr[v] = h.out[v] | h.in_mask(v);
    deg[v] = std::popcount(nbr[v]);
  }
  std::vector<int> order;
  order.reserve(h.n);
  uint64_t placed = 0;
  for (int step = 0; step < h.n; ++step) {
    int best = -1, best_touch = -1, best_deg = -1;
    for (int v = 0; v < h.n; ++v) {
      if ((placed >> v) & 1) continue;
      int touch = std::popcount(nbr[v] & placed);
      if (touch > best_touch || (touch == best_touch && deg[v] > best_deg)) {
        best = v;
        best_touch = touch;
        best_deg = deg[v];
      }
    }
    order.push_back(best);
    placed |= uint64_t{1} << best;
  }
  return order;
}

}  // namespace

std::optional<Homomorphism> find_hom(const OrientedGraph& h, const OrientedGraph& t,
                                     const HomOptions& options) {
  if (h.n > 0 && t.n == 0) return std::nullopt;
  if (h.n == 0) return Homomorphism{0, t.n, {}};
  if (options.injective && h.n > t.n) return std::nullopt;

  std::vector<int> candidates;
  if (options.target_order) {
    candidates = *options.target_order;
    if (static_cast<int>(candidates.size()) != t.n)
      throw InvalidInput("find_hom: target_order must be a permutation of the target vertices");
  } else {
    candidates.resize(t.n);
    for (int v = 0; v < t.n; ++v) candidates[v] = v;
  }

  std::vector<uint64_t> t_in(t.n);
  for (int v = 0; v < t.n; ++v) t_in[v] = t.in_mask(v);

  std::vector<int> pin(h.n, -1);
  for (auto [u, img] : options.pins) {
    if (u < 0 || u >= h.n || img < 0 || img >= t.n)
      throw InvalidInput("find_hom: pin out of range");
    pin[u] = img;
  }

  std::vector<int> order = variable_order(h);
  std::vector<uint64_t> h_in(h.n);
  for (int v = 0; v < h.n; ++v) h_in[v] = h.in_mask(v);

  std::vector<int> image(h.n, -1);
  uint64_t used = 0;
  uint64_t all_targets = full_mask(t.n);

  auto domain_at = [&](int v) {
    uint64_t dom = all_targets;
    for (uint64_t m = h_in[v]; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (image[u] >= 0) dom &= t.out[image[u]];
    }
    for (uint64_t m = h.out[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (image[w] >= 0) dom &= t_in[image[w]];
    }
    if (pin[v] >= 0) dom &= uint64_t{1} << pin[v];
    if (options.injective) dom &= ~used;
    return dom;
  };

  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == h.n) return true;
    int v = order[depth];
    uint64_t dom = domain_at(v);
    for (int c : candidates) {
      if (!((dom >> c) & 1)) continue;
      image[v] = c;
      used |= uint64_t{1} << c;
      if (self(self, depth + 1)) return true;
      used &= ~(uint64_t{1} << c);
      image[v] = -1;
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  Homomorphism f{h.n, t.n, image};
  if (!is_homomorphism(f, h, t))
    throw Error("find_hom: internal error, search returned an uncertified map");
  return f;
}

std::optional<Homomorphism> hom_exists(const OrientedGraph& h, const OrientedGraph& t) {
  if (t.n < 1 && h.n > 0) throw InvalidInput("hom_exists: target must be nonempty");
  return find_hom(h, t);
}

std::optional<Homomorphism> contains_copy(const OrientedGraph& g, const OrientedGraph& p) {
  HomOptions options;
  options.injective = true;
  auto f = find_hom(p, g, options);
  if (f && !is_injective(*f))
    throw Error("contains_copy: internal error, non-injective map returned");
  return f;
}

int64_t count_homs(const OrientedGraph& h, const OrientedGraph& t) {
  if (h.n == 0) return 1;
  if (t.n == 0) return 0;
  if (h.n * std::log(double(t.n)) > std::log(1e8))
    throw CapExceeded("count_homs: |T|^|H| exceeds the 1e8 guard");
  std::vector<uint64_t> t_in(t.n);
  for (int v = 0; v < t.n; ++v) t_in[v] = t.in_mask(v);
  std::vector<int> image(h.n, -1);
  int64_t count = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == h.n) {
      ++count;
      return;
    }
    for (int c = 0; c < t.n; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (h.has_arc(u, v) && !t.has_arc(image[u], c)) ok = false;
        if (h.has_arc(v, u) && !t.has_arc(c, image[u])) ok = false;
      }
      if (!ok) continue;
      image[v] = c;
      self(self, v + 1);
      image[v] = -1;
    }
  };
  dfs(dfs, 0);
  return count;
}

Homomorphism embed_via_domination(const OrientedGraph& h, const Tournament& t, int k) {
  if (!is_acyclic(h)) throw CyclicInput("embed_via_domination: H must be acyclic");
  for (int v = 0; v < h.n; ++v)
    if (h.out_degree(v) > k)
      throw InvalidInput("embed_via_domination: out-degree exceeds k");
  std::vector<int> order = topological_order(h);
  std::vector<int> image(h.n, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    uint64_t targets = 0;
    for (uint64_t m = h.out[v]; m; m &= m - 1)
      targets |= uint64_t{1} << image[std::countr_zero(m)];
    auto dominator = is_dominated(t, targets);
    if (!dominator)
      throw UndominatedSetError(targets,
                                "embed_via_domination: undominated image set encountered");
    image[v] = *dominator;
  }
  Homomorphism f{h.n, t.n, image};
  if (!is_homomorphism(f, h, t))
    throw Error("embed_via_domination: internal error, map failed certification");
  return f;
}

}  // namespace ogt
