#pragma once

#include <cstdint>
#include <vector>

#include "ogt/errors.hpp"

namespace ogt {

// One machine word holds a neighbor row, so graphs are capped at 64 vertices.
inline constexpr int kMaxVertices = 64;

inline uint64_t full_mask(int n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

struct Arc {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Loop-free antisymmetric digraph on at most 64 vertices, stored as one
// out-neighbor bitmask per vertex. Values are immutable once built: every
// operation below is a pure function returning a fresh graph.
struct OrientedGraph {
  int n = 0;
  std::vector<uint64_t> out;

  bool has_arc(int u, int v) const { return (out[u] >> v) & 1; }
  uint64_t out_mask(int v) const { return out[v]; }
  uint64_t in_mask(int v) const;
  int out_degree(int v) const;
  int in_degree(int v) const;
  int arc_count() const;
  std::vector<Arc> arcs() const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;
};

// Loop-freedom, antisymmetry, and no bits beyond vertex n-1.
bool is_valid_oriented(const OrientedGraph& g);
// Every vertex pair carries an arc (in exactly one direction, by antisymmetry).
bool is_complete(const OrientedGraph& g);

// An oriented graph whose every vertex pair carries exactly one arc.
// The checked constructor rejects incomplete or invalid graphs.
struct Tournament : OrientedGraph {
  Tournament() = default;
  explicit Tournament(OrientedGraph g);
};

OrientedGraph make_oriented(int n, const std::vector<Arc>& arcs);
Tournament make_tournament(int n, const std::vector<Arc>& arcs);

OrientedGraph reverse(const OrientedGraph& g);
// Subgraph induced on the set bits of `vertex_set`, reindexed 0..k-1
// preserving the relative order of the original indices.
OrientedGraph induced(const OrientedGraph& g, uint64_t vertex_set);

bool is_acyclic(const OrientedGraph& g);
// Lexicographically least topological order; throws CyclicInput.
std::vector<int> topological_order(const OrientedGraph& g);
// p(G): number of vertices of a longest directed path, by DAG dynamic
// programming. p(empty) = 0, p(arcless nonempty) = 1. Throws CyclicInput.
int longest_path_order(const OrientedGraph& g);
// Strongly connected components in condensation topological order (for a
// tournament the condensation is a transitive tournament, so the order is
// unique). Members of each component are sorted ascending.
std::vector<std::vector<int>> strongly_connected_components(const OrientedGraph& g);
bool is_strongly_connected(const OrientedGraph& g);

// Hamiltonian path by insertion: each vertex is inserted at the first
// position where the predecessor beats it and it beats the successor.
std::vector<int> hamiltonian_path(const Tournament& t);
// True iff `order` lists distinct vertices with every consecutive pair an arc.
bool validates_as_path(const OrientedGraph& g, const std::vector<int>& order);

// Number of directed triangles: C(n,3) - sum_v C(d+(v),2).
int64_t count_c3(const Tournament& t);

// Absolute / relative oriented clique numbers (exponential subset search,
// capped at 24 vertices). A pair is "joined" if some directed path of length
// at most 2 connects it in either direction; omega_ao requires the midpoints
// to lie inside the subset, omega_ro allows any midpoint in the graph.
int omega_ao(const OrientedGraph& g);
int omega_ro(const OrientedGraph& g);

int64_t binomial(int n, int k);

}  // namespace ogt
