#pragma once

#include <string>

#include "ogt/core.hpp"

namespace ogt {

// Native hex format, tournaments only: "n:HEX" where HEX packs the
// upper-triangle bits b(i,j) for i<j in lexicographic (i,j) order, bit = 1
// iff the arc i->j is present, most significant bit first, zero-padded to a
// byte boundary.
std::string hex_encode(const Tournament& t);
Tournament hex_decode(const std::string& s);

// digraph6 (graph6 family): '&', then N(n), then the full n*n adjacency
// matrix in row-major order, 6 bits per character offset by 63.
std::string digraph6_encode(const OrientedGraph& g);
OrientedGraph digraph6_decode(const std::string& s);

}  // namespace ogt
