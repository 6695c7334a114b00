#pragma once

#include <vector>

#include "ogt/core.hpp"

namespace ogt {

// TT_k: arcs i -> j for all i < j.
Tournament transitive_tournament(int k);
// P_k: arcs i -> i+1. Requires k >= 1.
OrientedGraph directed_path(int k);
// C_k: arcs i -> (i+1 mod k). Requires k >= 3.
OrientedGraph directed_cycle(int k);
// B_{s,t}: complete bipartite, all arcs towards the part of size t.
// Source part occupies indices 0..s-1.
OrientedGraph bipartite_oriented(int s, int t);

// P_k^(l): directed path plus arcs between vertices at distance l.
// Requires 2 <= l < k. Paper labels v_1..v_k map to indices 0..k-1.
OrientedGraph power_path(int k, int ell);
// C_k^(l): arcs w_i -> w_{i+1 (mod k)} and w_i -> w_{i+l (mod k)}; rejects
// parameters whose arc set would violate antisymmetry (e.g. k=3, l=2).
OrientedGraph power_cycle(int k, int ell);

// G (.) H: each vertex of G replaced by a copy of H, arcs of G replicated
// between copies. Vertex (i, a) of the result has index i*|H| + a.
OrientedGraph composition(const OrientedGraph& g, const OrientedGraph& h);
// G => H: disjoint union plus all arcs from G-side to H-side.
OrientedGraph arrow_join(const OrientedGraph& g, const OrientedGraph& h);
// Each vertex v of G replaced by an independent set of size sizes[v].
OrientedGraph blow_up(const OrientedGraph& g, const std::vector<int>& sizes);

// Reverses the orientation of every arc incident to v. An involution.
Tournament flip_vertex(const Tournament& t, int v);

// The 7-vertex tournament from the P_k^(3) lower bound: a transitive
// tournament on v_1..v_6 plus v_7 with out-neighborhood {v_1, v_2, v_4}
// (stored 0-indexed: vertex 6 has out-neighborhood {0, 1, 3}).
Tournament tilde_t7();

// The five strongly connected 5-vertex tournaments T_a..T_e, built from
// C_5^(3), C_5^(2) and TT_5 by single-arc reversals. The paper labels
// w_1..w_5 map to indices 0..4.
enum class SpecialT { A, B, C, D, E };
Tournament special_t(SpecialT which);
std::vector<Tournament> special_t_all();

// 11-vertex rotational tournament: arcs v_i -> v_{i+j mod 11} for
// j in {1, 3, 4, 5, 9}.
Tournament rotational_11();

// The acyclic orientation of K_{n,n} with a Hamiltonian path
// a_1 b_1 a_2 b_2 ... a_n b_n: arcs a_i -> b_j for j >= i and b_j -> a_i for
// i > j (1-indexed). Indices: a_i = i-1, b_j = n+j-1. Requires 1 <= n <= 32.
OrientedGraph knn_orientation(int n);

}  // namespace ogt
