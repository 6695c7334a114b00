#pragma once

#include <optional>
#include <vector>

#include "ogt/core.hpp"
#include "ogt/rng.hpp"

namespace ogt {

// Least-index vertex v with X subset of N+(v), if any. The empty set is
// dominated by vertex 0 (any vertex qualifies).
std::optional<int> is_dominated(const Tournament& t, uint64_t subset);

struct SubsetDominationReport {
  bool all_dominated = true;
  uint64_t failing_subset = 0;  // first failing k-subset in lexicographic order
};

// Exhaustive scan over all k-subsets of V(T).
SubsetDominationReport all_k_subsets_dominated(const Tournament& t, int k);

// dom(T): spanning subgraph keeping exactly the arcs u->v whose pair {u,v}
// is dominated by no vertex.
OrientedGraph domination_graph(const Tournament& t);

// Structure classification per the domination-graph theorem: either an odd
// directed cycle with outgoing pendant arcs and isolated vertices, or a
// forest of directed caterpillars (directed paths with outgoing pendant
// arcs). Anything else is Other, which the property tests treat as a bug.
struct DominationClassification {
  enum class Shape { OddCycleWithPendants, CaterpillarForest, Other };
  Shape shape = Shape::Other;
  int cycle_length = 0;            // odd-cycle case
  std::vector<int> spine_lengths;  // caterpillar case, one entry per component
};

// `tie_break` permutes vertex preference during spine extraction; the
// classification outcome is independent of it (asserted by tests). Default
// is ascending vertex order, which makes spines lexicographically least.
DominationClassification classify_domination(const OrientedGraph& dom_graph,
                                             const std::vector<int>* tie_break = nullptr);

// For every pair of vertex-disjoint dom(T)-arcs vw, v'w', the four arcs
// between {v,w} and {v',w'} must form one of the two directed 4-cycles
// (v v', v' w, w w', w' v) or (v w', w' w, w v', v' v).
bool check_disjoint_arc_dichotomy(const Tournament& t);

// If dom(T) has two vertex-disjoint arcs whose sources are not joined by a
// dom(T) arc, then T contains a copy of C_5^(3). Returns whether the
// implication holds (vacuously true when the premise never fires).
bool check_c53_forcing(const Tournament& t);

// C(n,k) * (1 - 2^-k)^(n-k): union bound on the probability that some
// k-subset of a random n-tournament is undominated. Evaluated in log space.
double domination_failure_bound(int n, int k);

// Samples random tournaments from the seeded stream until one with all
// k-subsets dominated appears or `trials` are exhausted. The returned
// tournament is re-verified before being handed out.
std::optional<Tournament> find_k_dominated_tournament(int k, int n, int trials, uint64_t seed);

}  // namespace ogt
