#pragma once

// Reference implementations used as test oracles. Everything here works on
// plain unsigned integers (bit i of a length-n sequence is (v >> (n-1-i)) & 1)
// and shares no code with the library.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ref {

inline int bit(unsigned v, int n, int i) { return static_cast<int>((v >> (n - 1 - i)) & 1u); }

inline std::string str(unsigned v, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += bit(v, n, i) ? '1' : '0';
  return s;
}

inline int zeros_before(unsigned v, int n, int i) {
  int z = 0;
  for (int j = 0; j < i; ++j) z += bit(v, n, j) == 0;
  return z;
}

/// Position of the single differing bit, or -1.
inline int differing(unsigned u, unsigned v, int n) {
  int at = -1;
  for (int i = 0; i < n; ++i) {
    if (bit(u, n, i) != bit(v, n, i)) {
      if (at >= 0) return -1;
      at = i;
    }
  }
  return at;
}

/// Standard cube: loops, and 0 -> 1 along every coordinate.
inline bool standard_edge(unsigned u, unsigned v, int n) {
  if (u == v) return true;
  const int i = differing(u, v, n);
  return i >= 0 && bit(u, n, i) == 0;
}

/// Twisted cube: as standard, but reversed when an odd number of zeros
/// precede the changing coordinate.
inline bool twisted_edge(unsigned u, unsigned v, int n) {
  if (u == v) return true;
  const int i = differing(u, v, n);
  return i >= 0 && bit(u, n, i) == zeros_before(u, n, i) % 2;
}

using EdgeFn = std::function<bool(unsigned, unsigned, int)>;
using Map = std::vector<unsigned>;

/// Every edge-preserving map 2^m -> 2^n by exhaustive search over all
/// (2^n)^(2^m) functions.
inline std::vector<Map> all_homs(int m, int n, const EdgeFn& edge) {
  const unsigned sm = 1u << m;
  const unsigned sn = 1u << n;
  std::vector<Map> out;
  Map f(sm, 0);
  while (true) {
    bool ok = true;
    for (unsigned a = 0; a < sm && ok; ++a) {
      for (unsigned b = 0; b < sm && ok; ++b) {
        if (edge(a, b, m) && !edge(f[a], f[b], n)) ok = false;
      }
    }
    if (ok) out.push_back(f);
    unsigned k = 0;
    while (k < sm && ++f[k] == sn) f[k++] = 0;
    if (k == sm) break;
  }
  return out;
}

/// Free preorder as a reachability matrix.
inline std::vector<std::vector<bool>> reach(int n, const EdgeFn& edge) {
  const unsigned s = 1u << n;
  std::vector<std::vector<bool>> r(s, std::vector<bool>(s));
  for (unsigned a = 0; a < s; ++a) {
    for (unsigned b = 0; b < s; ++b) r[a][b] = edge(a, b, n);
  }
  for (unsigned k = 0; k < s; ++k) {
    for (unsigned a = 0; a < s; ++a) {
      for (unsigned b = 0; b < s; ++b) r[a][b] = r[a][b] || (r[a][k] && r[k][b]);
    }
  }
  return r;
}

/// Directed Hamiltonian paths ignoring loops, by depth-first search.
inline std::vector<std::vector<unsigned>> hamiltonian_paths(int n, const EdgeFn& edge) {
  const unsigned s = 1u << n;
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> path;
  std::vector<bool> seen(s);
  std::function<void()> go = [&] {
    if (path.size() == s) {
      out.push_back(path);
      return;
    }
    for (unsigned v = 0; v < s; ++v) {
      if (seen[v] || v == path.back() || !edge(path.back(), v, n)) continue;
      seen[v] = true;
      path.push_back(v);
      go();
      path.pop_back();
      seen[v] = false;
    }
  };
  for (unsigned v = 0; v < s; ++v) {
    seen[v] = true;
    path = {v};
    go();
    seen[v] = false;
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

/// |□(m, n)|: choose which k inputs hit coordinates, inject them, send the
/// rest to one of two constants.
inline std::uint64_t bch_count(int m, int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= m && k <= n; ++k) {
    std::uint64_t falling = 1;
    for (int i = 0; i < k; ++i) falling *= static_cast<std::uint64_t>(n - i);
    total += binomial(m, k) * falling * pow2(m - k);
  }
  return total;
}

/// |⊠(m, n)|: sequences of length n over {0,1,*} with at most m stars.
inline std::uint64_t ternary_count(int m, int n) {
  std::uint64_t total = 0;
  for (int s = 0; s <= m && s <= n; ++s) total += binomial(n, s) * pow2(n - s);
  return total;
}

}  // namespace ref
