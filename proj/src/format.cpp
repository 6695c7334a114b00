#include "ogt/format.hpp"

#include <cctype>

namespace ogt {

namespace {

constexpr const char* kHexDigits = "0123456789ABCDEF";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  throw InvalidInput("hex_decode: invalid hex digit");
}

}  // namespace

std::string hex_encode(const Tournament& t) {
  int bits = t.n * (t.n - 1) / 2;
  std::vector<uint8_t> bytes((bits + 7) / 8, 0);
  int pos = 0;
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j) {
      if (t.has_arc(i, j)) bytes[pos / 8] |= uint8_t(0x80 >> (pos % 8));
      ++pos;
    }
  std::string out = std::to_string(t.n) + ":";
  for (uint8_t b : bytes) {
    out += kHexDigits[b >> 4];
    out += kHexDigits[b & 0xF];
  }
  return out;
}

Tournament hex_decode(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos || colon == 0)
    throw InvalidInput("hex_decode: expected \"n:HEX\"");
  int n = 0;
  for (size_t i = 0; i < colon; ++i) {
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw InvalidInput("hex_decode: bad vertex count");
    n = n * 10 + (s[i] - '0');
    if (n > kMaxVertices) throw CapExceeded("hex_decode: more than 64 vertices");
  }
  int bits = n * (n - 1) / 2;
  size_t want = static_cast<size_t>((bits + 7) / 8) * 2;
  if (s.size() - colon - 1 != want)
    throw InvalidInput("hex_decode: hex payload has wrong length");
  std::vector<uint8_t> bytes(want / 2, 0);
  for (size_t i = 0; i < want; i += 2)
    bytes[i / 2] = static_cast<uint8_t>((hex_value(s[colon + 1 + i]) << 4) |
                                        hex_value(s[colon + 2 + i]));
  OrientedGraph g;
  g.n = n;
  g.out.assign(n, 0);
  int pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool fwd = bytes[pos / 8] & (0x80 >> (pos % 8));
      ++pos;
      if (fwd)
        g.out[i] |= uint64_t{1} << j;
      else
        g.out[j] |= uint64_t{1} << i;
    }
  // trailing pad bits must be zero
  for (int p = pos; p < static_cast<int>(bytes.size()) * 8; ++p)
    if (bytes[p / 8] & (0x80 >> (p % 8)))
      throw InvalidInput("hex_decode: nonzero padding bits");
  return Tournament(g);
}

std::string digraph6_encode(const OrientedGraph& g) {
  std::string out = "&";
  if (g.n <= 62) {
    out += static_cast<char>(g.n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((g.n >> 12) & 0x3F) + 63);
    out += static_cast<char>(((g.n >> 6) & 0x3F) + 63);
    out += static_cast<char>((g.n & 0x3F) + 63);
  }
  int bits = g.n * g.n;
  int value = 0, have = 0;
  for (int pos = 0; pos < bits; ++pos) {
    int i = pos / g.n, j = pos % g.n;
    value = (value << 1) | (i != j && g.has_arc(i, j) ? 1 : 0);
    if (++have == 6) {
      out += static_cast<char>(value + 63);
      value = 0;
      have = 0;
    }
  }
  if (have > 0) out += static_cast<char>((value << (6 - have)) + 63);
  return out;
}

OrientedGraph digraph6_decode(const std::string& s) {
  size_t at = 0;
  auto next = [&]() -> int {
    if (at >= s.size()) throw InvalidInput("digraph6_decode: truncated input");
    char c = s[at++];
    if (c < 63 || c > 126) throw InvalidInput("digraph6_decode: byte out of range");
    return c - 63;
  };
  if (s.rfind(">>digraph6<<", 0) == 0) at = 12;
  if (at >= s.size() || s[at] != '&')
    throw InvalidInput("digraph6_decode: missing '&' header");
  ++at;
  int n = next();
  if (n == 63) {
    int a = next(), b = next(), c = next();
    if (a == 63) throw InvalidInput("digraph6_decode: 36-bit orders not supported");
    n = (a << 12) | (b << 6) | c;
  }
  if (n > kMaxVertices) throw CapExceeded("digraph6_decode: more than 64 vertices");
  OrientedGraph g;
  g.n = n;
  g.out.assign(n, 0);
  int bits = n * n;
  int value = 0, have = 0;
  for (int pos = 0; pos < bits; ++pos) {
    if (have == 0) {
      value = next();
      have = 6;
    }
    bool bit = (value >> (have - 1)) & 1;
    --have;
    if (bit) {
      int i = pos / n, j = pos % n;
      if (i == j) throw InvalidInput("digraph6_decode: self-loop");
      if (g.has_arc(j, i))
        throw InvalidInput("digraph6_decode: digon (not an oriented graph)");
      g.out[i] |= uint64_t{1} << j;
    }
  }
  if (at != s.size()) throw InvalidInput("digraph6_decode: trailing bytes");
  return g;
}

}  // namespace ogt
