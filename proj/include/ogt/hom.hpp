#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ogt/core.hpp"

namespace ogt {

// A vertex map H -> T. Only maps certified by is_homomorphism are ever
// returned by the searches below.
struct Homomorphism {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> map;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

// True iff every arc u->v of `h` maps to an arc map[u]->map[v] of `t`.
bool is_homomorphism(const Homomorphism& f, const OrientedGraph& h, const OrientedGraph& t);
bool is_injective(const Homomorphism& f);

struct HomOptions {
  bool injective = false;
  // Candidate exploration order over target vertices; must be a permutation
  // of 0..|T|-1. Defaults to ascending index order, which makes the returned
  // witness the lexicographically least under the variable order.
  const std::vector<int>* target_order = nullptr;
  // Pre-assigned source vertices (vertex, image).
  std::vector<std::pair<int, int>> pins;
};

// Backtracking search. Acyclic sources are assigned in topological order, so
// each new vertex's domain is the intersection of out-neighborhoods of its
// already-placed in-neighbors; cyclic sources use a connectivity-aware
// max-degree-first order with the same incremental domain pruning.
std::optional<Homomorphism> find_hom(const OrientedGraph& h, const OrientedGraph& t,
                                     const HomOptions& options = {});

// Certified homomorphism H -> T, or exhaustively verified absence.
std::optional<Homomorphism> hom_exists(const OrientedGraph& h, const OrientedGraph& t);

// Injective arc-preserving map of P onto a subgraph of G (a "copy").
std::optional<Homomorphism> contains_copy(const OrientedGraph& g, const OrientedGraph& p);

// Exact homomorphism count by exhaustive assignment in plain vertex-index
// order; test oracle for hom_exists. Guarded at |T|^|H| <= 1e8.
int64_t count_homs(const OrientedGraph& h, const OrientedGraph& t);

// Thrown by embed_via_domination when a set that must be dominated is not.
struct UndominatedSetError : Error {
  uint64_t subset;
  explicit UndominatedSetError(uint64_t s, const std::string& msg)
      : Error(msg), subset(s) {}
};

// Constructive embedding of an acyclic H with max out-degree <= k into a
// tournament whose k-subsets are all dominated: vertices are processed in
// reverse topological order and each one is placed at the least-index
// dominator of its already-placed out-neighborhood image.
Homomorphism embed_via_domination(const OrientedGraph& h, const Tournament& t, int k);

}  // namespace ogt
