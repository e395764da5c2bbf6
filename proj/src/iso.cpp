#include "gfchordal/iso.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "gfchordal/error.hpp"
#include "gfchordal/geometry.hpp"

namespace gfc {

namespace {

template <typename T>
std::vector<int> dense_ranks(const std::vector<T>& keys) {
  std::vector<T> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  }
  return out;
}

int distinct_count(const std::vector<int>& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Individualization-refinement over element colorings; the certificate of a
// discrete coloring is the sorted list of relabeled hyperplanes.
class CanonicalSearch {
 public:
  CanonicalSearch(int n, std::vector<ElementSet> hyperplanes)
      : n_(n), hyps_(std::move(hyperplanes)), incidence_(n) {
    for (std::size_t h = 0; h < hyps_.size(); ++h) {
      for (int e : hyps_[h]) incidence_[e].push_back(static_cast<int>(h));
    }
  }

  std::vector<int> run(std::vector<int> initial) {
    std::vector<int> path;
    explore(refine(std::move(initial)), path);
    return best_lab_;
  }

  std::vector<std::uint64_t> certificate(const std::vector<int>& lab) const {
    std::vector<std::uint64_t> cert;
    cert.reserve(hyps_.size());
    for (ElementSet h : hyps_) {
      std::uint64_t bits = 0;
      for (int e : h) bits |= std::uint64_t{1} << lab[e];
      cert.push_back(bits);
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

 private:
  std::vector<int> refine(std::vector<int> col) const {
    int colors = distinct_count(col);
    while (true) {
      std::vector<std::vector<int>> hsig(hyps_.size());
      for (std::size_t h = 0; h < hyps_.size(); ++h) {
        for (int e : hyps_[h]) hsig[h].push_back(col[e]);
        std::sort(hsig[h].begin(), hsig[h].end());
      }
      const auto hcol = dense_ranks(hsig);
      std::vector<std::vector<int>> esig(n_);
      for (int e = 0; e < n_; ++e) {
        esig[e].push_back(col[e]);
        std::vector<int> around;
        for (int h : incidence_[e]) around.push_back(hcol[h]);
        std::sort(around.begin(), around.end());
        esig[e].insert(esig[e].end(), around.begin(), around.end());
      }
      col = dense_ranks(esig);
      const int next = distinct_count(col);
      if (next == colors) return col;
      colors = next;
    }
  }

  static std::vector<int> individualize(const std::vector<int>& col, int v) {
    std::vector<int> keyed(col.size());
    for (std::size_t e = 0; e < col.size(); ++e) keyed[e] = 2 * col[e] + (static_cast<int>(e) == v ? 0 : 1);
    return dense_ranks(keyed);
  }

  bool same_orbit(int w, const std::vector<int>& explored, const std::vector<int>& path) const {
    UnionFind uf(n_);
    for (const auto& g : autos_) {
      const bool fixes_path = std::all_of(path.begin(), path.end(), [&](int v) { return g[v] == v; });
      if (!fixes_path) continue;
      for (int e = 0; e < n_; ++e) uf.unite(e, g[e]);
    }
    const int root = uf.find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return uf.find(u) == root; });
  }

  void record_automorphism(const std::vector<int>& ref, const std::vector<int>& lab) {
    std::vector<int> inv(n_);
    for (int e = 0; e < n_; ++e) inv[ref[e]] = e;
    std::vector<int> g(n_);
    for (int e = 0; e < n_; ++e) g[e] = inv[lab[e]];
    autos_.push_back(std::move(g));
  }

  void explore(const std::vector<int>& col, std::vector<int>& path) {
    if (distinct_count(col) == n_) {
      auto cert = certificate(col);
      if (first_lab_.empty() && n_ > 0) {
        first_lab_ = best_lab_ = col;
        first_cert_ = best_cert_ = std::move(cert);
      } else if (n_ == 0) {
        best_lab_ = col;
      } else if (cert == first_cert_) {
        record_automorphism(first_lab_, col);
      } else if (cert == best_cert_) {
        record_automorphism(best_lab_, col);
      } else if (cert < best_cert_) {
        best_lab_ = col;
        best_cert_ = std::move(cert);
      }
      return;
    }
    // first non-singleton cell in color order
    std::vector<int> size(n_, 0);
    for (int c : col) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;

    std::vector<int> explored;
    for (int w = 0; w < n_; ++w) {
      if (col[w] != target) continue;
      if (!explored.empty() && same_orbit(w, explored, path)) continue;
      explored.push_back(w);
      path.push_back(w);
      explore(refine(individualize(col, w)), path);
      path.pop_back();
    }
  }

  int n_;
  std::vector<ElementSet> hyps_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<std::vector<int>> autos_;
};

std::vector<int> initial_coloring(const Matroid& m, const FlatLattice& lattice) {
  const int n = m.size();
  std::vector<std::vector<int>> keys(n);
  for (int k = 1; k < lattice.rank(); ++k) {
    std::vector<std::vector<int>> sizes(n);
    for (ElementSet f : lattice.flats(k)) {
      for (int e : f) sizes[e].push_back(f.count());
    }
    for (int e = 0; e < n; ++e) {
      std::sort(sizes[e].begin(), sizes[e].end());
      keys[e].push_back(-1);
      keys[e].insert(keys[e].end(), sizes[e].begin(), sizes[e].end());
    }
  }
  return dense_ranks(keys);
}

void check_size(const Matroid& m) {
  if (m.size() > kMaxCanonicalSize) {
    throw Error(Errc::too_large, "canonical forms are limited to " + std::to_string(kMaxCanonicalSize) +
                                     " elements (got " + std::to_string(m.size()) + ")");
  }
}

}  // namespace

std::string CanonicalForm::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(size));
  mix(static_cast<std::uint64_t>(rank));
  for (const auto& level : profile) {
    mix(~std::uint64_t{0});
    for (int s : level) mix(static_cast<std::uint64_t>(s));
  }
  for (auto c : certificate) mix(c);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<int> canonical_labeling(const Matroid& m, const FlatLattice& lattice) {
  check_size(m);
  CanonicalSearch search(m.size(), lattice.hyperplanes());
  return search.run(initial_coloring(m, lattice));
}

CanonicalForm canonical_form(const Matroid& m, const FlatLattice& lattice) {
  check_size(m);
  CanonicalForm cf;
  cf.size = m.size();
  cf.rank = m.rank();
  for (int k = 0; k <= lattice.rank(); ++k) {
    std::vector<int> sizes;
    for (ElementSet f : lattice.flats(k)) sizes.push_back(f.count());
    std::sort(sizes.begin(), sizes.end());
    cf.profile.push_back(std::move(sizes));
  }
  CanonicalSearch search(m.size(), lattice.hyperplanes());
  const auto lab = search.run(initial_coloring(m, lattice));
  cf.certificate = search.certificate(lab);
  return cf;
}

CanonicalForm canonical_form(const Matroid& m) {
  check_size(m);
  return canonical_form(m, FlatLattice(m));
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
  check_size(a);
  check_size(b);
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<int> is_projective_geometry(const Matroid& m) {
  if (m.size() == pg_point_count(m.rank(), m.q())) return m.rank();
  return std::nullopt;
}

bool is_uniform(const Matroid& m) {
  const int r = m.rank();
  const int n = m.size();
  if (r == 0 || r == n) return true;
  // walk all r-subsets in lexicographic order
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ElementSet s;
    for (int i : idx) s = s.with(i);
    if (m.rank(s) != r) return false;
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == n - r + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int j = pos + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<std::string> detect_forbidden(const Matroid& m, int q) {
  const int n = m.size();
  const int r = m.rank();
  if (r == 2 && n >= 3 && n <= q) return "U(2," + std::to_string(n) + ")";
  if (r == 3 && n == q + 2 && is_uniform(m)) return "U(3," + std::to_string(q + 2) + ")";
  if (q == 2 && r == 3 && n == 6) {
    static const CanonicalForm mk4 = canonical_form(construct_mk4());
    if (canonical_form(m) == mk4) return "M(K4)";
  }
  return std::nullopt;
}

}  // namespace gfc
