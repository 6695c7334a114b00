#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ogt/core.hpp"

namespace ogt {

enum class CodeKind : uint8_t { Tournament, Oriented };

// Isomorphism-invariant byte certificate: equal codes iff isomorphic graphs
// (verified against a brute-force permutation oracle in the tests).
struct CanonicalCode {
  int n = 0;
  CodeKind kind = CodeKind::Oriented;
  std::vector<uint8_t> bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// Minimal bit string over all vertex permutations compatible with the sorted
// (out-degree, in-degree) partition. Bit layout is column-major so each newly
// placed vertex appends a contiguous segment, enabling prefix pruning.
// Capped at 12 vertices.
CanonicalCode canonical_code(const OrientedGraph& g, CodeKind kind);
// Picks the Tournament encoding iff the graph is complete.
CanonicalCode canonical_code(const OrientedGraph& g);

// Independent second canonical form (maximal bit string, descending degree
// partition); census cross-checks run both and compare class counts.
CanonicalCode canonical_code_alt(const OrientedGraph& g, CodeKind kind);

bool are_isomorphic(const OrientedGraph& a, const OrientedGraph& b);

// Rebuild the canonical representative from its code bytes.
Tournament tournament_from_code(int n, std::span<const uint8_t> bytes);
OrientedGraph oriented_from_code(int n, std::span<const uint8_t> bytes);

size_t code_byte_width(int n, CodeKind kind);

}  // namespace ogt
