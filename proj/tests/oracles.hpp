#pragma once

// Reference models used only by the tests. An automorphism is modelled as a
// permutation of the d^n leaves (words read as base-d numbers, first letter
// most significant); everything else is derived from that leaf map, so none
// of this shares code with the portrait arithmetic under test.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

#include "wreath/tree_aut.hpp"

namespace oracle {

struct LeafMap {
  int d = 3;
  int n = 0;
  std::vector<int> img;  // leaf -> leaf

  friend bool operator==(const LeafMap&, const LeafMap&) = default;
  friend bool operator<(const LeafMap& a, const LeafMap& b) { return a.img < b.img; }
};

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline int parity_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

// Walks the portrait from the root: letter i at output vertex p goes to
// label(p)(i), and the walk continues at the child it landed on.
inline LeafMap from_portrait(const wreath::TreeAut& a) {
  const int d = a.degree(), n = a.level();
  LeafMap m{d, n, std::vector<int>(static_cast<std::size_t>(ipow(d, n)))};
  for (long leaf = 0; leaf < static_cast<long>(m.img.size()); ++leaf) {
    long out = 0, pos = 0, offset = 0, width = 1;
    for (int t = 0; t < n; ++t) {
      const int letter = static_cast<int>(leaf / ipow(d, n - 1 - t) % d);
      const auto label = a.label(static_cast<std::size_t>(offset + pos));
      const int moved = label(letter);
      out = out * d + moved;
      pos = pos * d + moved;
      offset += width;
      width *= d;
    }
    m.img[static_cast<std::size_t>(leaf)] = static_cast<int>(out);
  }
  return m;
}

// (a*b)(v) = a(b(v))
inline LeafMap compose(const LeafMap& a, const LeafMap& b) {
  LeafMap r{a.d, a.n, std::vector<int>(a.img.size())};
  for (std::size_t v = 0; v < a.img.size(); ++v) r.img[v] = a.img[static_cast<std::size_t>(b.img[v])];
  return r;
}

inline LeafMap inverse(const LeafMap& a) {
  LeafMap r{a.d, a.n, std::vector<int>(a.img.size())};
  for (std::size_t v = 0; v < a.img.size(); ++v) r.img[static_cast<std::size_t>(a.img[v])] = static_cast<int>(v);
  return r;
}

inline bool is_identity(const LeafMap& a) {
  for (std::size_t v = 0; v < a.img.size(); ++v)
    if (a.img[v] != static_cast<int>(v)) return false;
  return true;
}

// Permutation induced on the d^t vertices of depth t.
inline std::vector<int> on_depth(const LeafMap& a, int t) {
  const long below = ipow(a.d, a.n - t);
  std::vector<int> p(static_cast<std::size_t>(ipow(a.d, t)));
  for (long u = 0; u < static_cast<long>(p.size()); ++u)
    p[static_cast<std::size_t>(u)] = static_cast<int>(a.img[static_cast<std::size_t>(u * below)] / below);
  return p;
}

// Section at a vertex u of depth t: v -> suffix of a(u v).
inline LeafMap section(const LeafMap& a, long u, int t) {
  const long below = ipow(a.d, a.n - t);
  LeafMap s{a.d, a.n - t, std::vector<int>(static_cast<std::size_t>(below))};
  for (long v = 0; v < below; ++v)
    s.img[static_cast<std::size_t>(v)] = static_cast<int>(a.img[static_cast<std::size_t>(u * below + v)] % below);
  return s;
}

inline LeafMap truncate(const LeafMap& a, int m) {
  const long below = ipow(a.d, a.n - m);
  LeafMap r{a.d, m, std::vector<int>(static_cast<std::size_t>(ipow(a.d, m)))};
  for (long u = 0; u < static_cast<long>(r.img.size()); ++u)
    r.img[static_cast<std::size_t>(u)] = static_cast<int>(a.img[static_cast<std::size_t>(u * below)] / below);
  return r;
}

// Sign of the action on depth-2 vertices is sign(tau)^d * prod sign(x_i);
// multiplying by sign(tau)^(d+1) leaves sign(tau) * prod sign(x_i).
inline int sgn2(const LeafMap& a) {
  const int s1 = parity_sign(on_depth(a, 1));
  const int s2 = parity_sign(on_depth(a, 2));
  return (a.d % 2 == 0 ? s1 : 1) * s2;
}

// Every section acts evenly on its first level.
inline bool in_u(const LeafMap& a) {
  for (int t = 0; t < a.n; ++t)
    for (long u = 0; u < ipow(a.d, t); ++u)
      if (parity_sign(on_depth(section(a, u, t), 1)) != 1) return false;
  return true;
}

// Every section of depth <= n-2 has sgn2 = +1.
inline bool in_e(const LeafMap& a) {
  for (int t = 0; t + 2 <= a.n; ++t)
    for (long u = 0; u < ipow(a.d, t); ++u)
      if (sgn2(truncate(section(a, u, t), 2)) != 1) return false;
  return true;
}

struct LeafHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

using LeafSet = std::unordered_set<std::vector<int>, LeafHash>;

inline LeafSet closure(const std::vector<LeafMap>& gens) {
  LeafSet seen;
  std::deque<std::vector<int>> queue;
  std::vector<int> id(gens.front().img.size());
  std::iota(id.begin(), id.end(), 0);
  seen.insert(id);
  queue.push_back(id);
  std::vector<int> next(id.size());
  while (!queue.empty()) {
    const std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      for (std::size_t v = 0; v < cur.size(); ++v) next[v] = g.img[static_cast<std::size_t>(cur[v])];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

// Orders written out directly from the portrait counts.
inline unsigned long long factorial(int d) {
  unsigned long long f = 1;
  for (int i = 2; i <= d; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

inline bool is_perfect_square(long long x) {
  if (x < 0) return false;
  long long r = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

// p/q in lowest terms is a square iff p and q are both squares.
inline bool rational_is_square(long long p, long long q) {
  const long long g = std::gcd(p < 0 ? -p : p, q);
  return is_perfect_square(p / g) && is_perfect_square(q / g);
}

} // namespace oracle
