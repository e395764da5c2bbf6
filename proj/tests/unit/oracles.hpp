#pragma once

// Brute-force reference computations. Slow on purpose, and independent of
// the library algorithms they are checked against.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "gfchordal/enumerate.hpp"
#include "gfchordal/field.hpp"
#include "gfchordal/matroid.hpp"

namespace oracle {

using gfc::ElementSet;
using gfc::Matroid;

// Product in GF(p^d) from base-p digit polynomials, reduced by x^d = tail(x).
inline int poly_mul(int q, int a, int b) {
  int p = 0;
  int d = 0;
  for (int cand : {2, 3, 5, 7}) {
    int x = 1;
    int k = 0;
    while (x < q) {
      x *= cand;
      ++k;
    }
    if (x == q) {
      p = cand;
      d = k;
      break;
    }
  }
  // coefficients of x^d expressed in lower powers
  std::vector<int> tail(d, 0);
  if (q == 4) tail = {1, 1};     // x^2 = x + 1
  if (q == 8) tail = {1, 1, 0};  // x^3 = x + 1
  if (q == 9) tail = {2, 0};     // x^2 = -1
  if (d == 1) return (a * b) % p;

  std::vector<int> ca(d), cb(d);
  for (int i = 0; i < d; ++i) {
    ca[i] = a % p;
    a /= p;
    cb[i] = b % p;
    b /= p;
  }
  std::vector<int> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  for (int k = 2 * d - 2; k >= d; --k) {
    const int c = prod[k];
    prod[k] = 0;
    for (int i = 0; i < d; ++i) prod[k - d + i] = (prod[k - d + i] + c * tail[i]) % p;
  }
  int out = 0;
  for (int i = d - 1; i >= 0; --i) out = out * p + prod[i];
  return out;
}

inline int rank_by_subsets(const Matroid& m, ElementSet s) { return m.rank(s); }

// All flats by definition: sets equal to their closure, found by scanning
// every subset (n <= 16).
inline std::set<std::uint64_t> all_flats(const Matroid& m) {
  std::set<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    const ElementSet x(s);
    bool flat = true;
    const int r = m.rank(x);
    for (int e = 0; e < m.size() && flat; ++e) {
      if (!x.contains(e) && m.rank(x.with(e)) == r) flat = false;
    }
    if (flat) out.insert(s);
  }
  return out;
}

inline std::vector<std::uint64_t> hyperplane_bits(const Matroid& m) {
  std::vector<std::uint64_t> out;
  for (auto f : all_flats(m)) {
    if (m.rank(ElementSet(f)) == m.rank() - 1) out.push_back(f);
  }
  return out;
}

inline std::uint64_t permute(std::uint64_t s, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    if ((s >> i) & 1) out |= std::uint64_t{1} << perm[i];
  }
  return out;
}

// Permutation search: some bijection carries the hyperplanes of a onto those of b.
inline bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  if (a.size() == 0) return true;
  const auto ha = hyperplane_bits(a);
  auto hb = hyperplane_bits(b);
  if (ha.size() != hb.size()) return false;
  std::sort(hb.begin(), hb.end());
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::uint64_t> img;
    img.reserve(ha.size());
    for (auto h : ha) img.push_back(permute(h, perm));
    std::sort(img.begin(), img.end());
    if (img == hb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Minimal dependent sets by subset scan.
inline std::set<std::uint64_t> circuits(const Matroid& m) {
  std::set<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    const ElementSet x(s);
    if (m.rank(x) == x.count()) continue;
    bool minimal = true;
    for (int e : x) {
      if (m.rank(x.without(e)) != x.count() - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(s);
  }
  return out;
}

struct Partition {
  std::uint64_t x;
  int lambda;  // r(X) + r(Y) - r(M)
  int min_rank;
};

// Every partition with X holding element 0 and both sides nonempty.
inline std::vector<Partition> partitions(const Matroid& m) {
  std::vector<Partition> out;
  const int n = m.size();
  const ElementSet e = m.ground();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const ElementSet x(s);
    if (!x.contains(0) || x == e) continue;
    const ElementSet y = e - x;
    const int rx = m.rank(x);
    const int ry = m.rank(y);
    out.push_back({s, rx + ry - m.rank(), std::min(rx, ry)});
  }
  return out;
}

// Vertical k-separation by the definition.
inline bool vertical(const Partition& p, int k) { return p.lambda <= k - 1 && p.min_rank >= k; }
inline bool exact_vertical(const Partition& p, int k) { return vertical(p, k) && p.lambda == k - 1; }

inline std::set<std::uint64_t> divider_sides(const Matroid& m) {
  std::set<std::uint64_t> out;
  for (const auto& p : partitions(m)) {
    for (int k = 1; k <= m.rank(); ++k) {
      if (exact_vertical(p, k)) out.insert(p.x);
    }
  }
  return out;
}

inline ElementSet glue_of(const Matroid& m, std::uint64_t x) {
  const ElementSet xs(x);
  return m.closure(xs) & m.closure(m.ground() - xs);
}

// Minimal dividers against the literal pool: every vertical separation of
// any order, exact or not.
inline std::set<std::uint64_t> minimal_divider_sides_literal(const Matroid& m) {
  std::vector<ElementSet> pool;
  for (const auto& p : partitions(m)) {
    for (int k = 1; k <= m.rank(); ++k) {
      if (vertical(p, k)) {
        pool.push_back(glue_of(m, p.x));
        break;
      }
    }
  }
  std::set<std::uint64_t> out;
  for (auto x : divider_sides(m)) {
    const ElementSet f = glue_of(m, x);
    const bool beaten =
        std::any_of(pool.begin(), pool.end(), [&](ElementSet g) { return g != f && g.subset_of(f); });
    if (!beaten) out.insert(x);
  }
  return out;
}

inline bool has_vertical_separation(const Matroid& m) {
  for (const auto& p : partitions(m)) {
    for (int k = 1; k <= m.rank(); ++k) {
      if (vertical(p, k)) return true;
    }
  }
  return false;
}

// Orbit count by marking every image of every subset.
inline std::vector<gfc::OrbitRecord> orbits_by_marking(const gfc::GroupAction& g) {
  const std::uint64_t total = std::uint64_t{1} << g.points();
  std::vector<char> seen(total, 0);
  std::vector<gfc::OrbitRecord> out;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (seen[s]) continue;
    std::uint64_t size = 0;
    for (std::size_t k = 0; k < g.order(); ++k) {
      const auto img = g.apply(k, s);
      if (!seen[img]) {
        seen[img] = 1;
        ++size;
      }
    }
    out.push_back({s, size});
  }
  return out;
}

// Small members of the binary rank <= 4 and ternary rank <= 3 catalogs.
inline std::vector<Matroid> small_corpus(int max_size) {
  std::vector<Matroid> out;
  for (auto [q, rmax] : {std::pair{2, 4}, std::pair{3, 3}}) {
    for (int r = 0; r <= rmax; ++r) {
      for (auto& e : gfc::enumerate_matroids(r, gfc::field_of(q), true).entries) {
        if (e.matroid.size() <= max_size) out.push_back(e.matroid);
      }
    }
  }
  return out;
}

}  // namespace oracle
