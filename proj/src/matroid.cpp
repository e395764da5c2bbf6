#include "gfchordal/matroid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_set>

#include "gfchordal/error.hpp"

namespace gfc {

Matroid::Matroid(const Field& field, int ambient_dim, std::vector<Coords> points,
                 std::vector<std::string> labels)
    : field_(&field) {
  if (ambient_dim < 0) throw Error(Errc::invalid_argument, "negative ambient dimension");
  if (ambient_dim > kMaxDim) {
    throw Error(Errc::too_large, "ambient dimension exceeds " + std::to_string(kMaxDim));
  }
  if (points.size() > static_cast<std::size_t>(ElementSet::kCapacity)) {
    throw Error(Errc::too_large, "matroids are limited to 64 elements");
  }
  n_ = static_cast<int>(points.size());
  if (labels.empty()) {
    labels.reserve(n_);
    for (int i = 0; i < n_; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n_) {
    throw Error(Errc::invalid_argument, "label count does not match point count");
  }

  std::set<Coords> seen;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != ambient_dim) {
      throw Error(Errc::invalid_argument, "point length does not match ambient dimension");
    }
    for (Elem x : p) {
      if (x >= field.order()) throw Error(Errc::invalid_argument, "coordinate outside the field");
    }
    if (!is_normalized(p)) {
      throw Error(Errc::invalid_argument, "point is zero or not normalized (first nonzero must be 1)");
    }
    if (!seen.insert(p).second) throw Error(Errc::invalid_argument, "repeated point (matroid must be simple)");
  }

  std::vector<std::span<const Elem>> cols(points.begin(), points.end());
  const int k = column_rank(field, ambient_dim, cols);
  if (k < ambient_dim) points = trim_to_row_space(field, ambient_dim, points);
  rank_ = k;

  coords_.reserve(static_cast<std::size_t>(n_) * rank_);
  for (const auto& p : points) coords_.insert(coords_.end(), p.begin(), p.end());
  labels_ = std::move(labels);
  build_index();
}

Matroid Matroid::empty(const Field& field) { return Matroid(field, 0, {}); }

void Matroid::build_index() {
  index_.clear();
  for (int i = 0; i < n_; ++i) {
    if (labels_[i].empty()) throw Error(Errc::invalid_argument, "empty label");
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(Errc::invalid_argument, "duplicate label '" + labels_[i] + "'");
    }
  }
}

std::vector<Coords> Matroid::points() const {
  std::vector<Coords> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    auto p = point(i);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

int Matroid::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw Error(Errc::unknown_label, "unknown label '" + std::string(label) + "'");
  return it->second;
}

ElementSet Matroid::elements(std::span<const std::string> labels) const {
  ElementSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

ElementSet Matroid::elements(std::initializer_list<std::string_view> labels) const {
  ElementSet s;
  for (auto l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> Matroid::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (int i : s) out.push_back(labels_[i]);
  return out;
}

int Matroid::rank(ElementSet s) const {
  EchelonBasis b(*field_, rank_);
  for (int i : s) {
    b.insert(point(i));
    if (b.rank() == rank_) break;
  }
  return b.rank();
}

ElementSet Matroid::closure(ElementSet s) const {
  EchelonBasis b(*field_, rank_);
  for (int i : s) {
    b.insert(point(i));
    if (b.rank() == rank_) return ground();
  }
  ElementSet out = s;
  for (int i : ground() - s) {
    if (b.contains(point(i))) out = out.with(i);
  }
  return out;
}

Matroid Matroid::restrict_to(ElementSet keep) const {
  std::vector<Coords> pts;
  std::vector<std::string> labs;
  for (int i : keep) {
    auto p = point(i);
    pts.emplace_back(p.begin(), p.end());
    labs.push_back(labels_[i]);
  }
  if (pts.empty()) return empty(*field_);
  return Matroid(*field_, rank_, std::move(pts), std::move(labs));
}

FlatLattice::FlatLattice(const Matroid& m) : ground_(m.ground()) {
  const int r = m.rank();
  by_rank_.resize(r + 1);
  by_rank_[0].push_back(ElementSet{});
  for (int k = 0; k < r; ++k) {
    std::unordered_set<std::uint64_t> next;
    for (ElementSet f : by_rank_[k]) {
      ElementSet rest = ground_ - f;
      while (!rest.empty()) {
        const int e = rest.lowest();
        const ElementSet g = m.closure(f.with(e));
        next.insert(g.bits());
        rest = rest - g;
      }
    }
    auto& level = by_rank_[k + 1];
    for (auto bits : next) level.emplace_back(bits);
    std::sort(level.begin(), level.end(), LexLess{});
  }
  for (int k = 0; k <= r; ++k) {
    for (ElementSet f : by_rank_[k]) flat_rank_.emplace(f.bits(), k);
  }
  if (r >= 1) hyperplanes_ = by_rank_[r - 1];
}

std::size_t FlatLattice::flat_count() const {
  std::size_t c = 0;
  for (const auto& l : by_rank_) c += l.size();
  return c;
}

ElementSet FlatLattice::closure(ElementSet s) const {
  ElementSet acc = ground_;
  for (ElementSet h : hyperplanes_) {
    if (s.subset_of(h)) acc &= h;
  }
  return acc;
}

int FlatLattice::rank(ElementSet s) const { return rank_of_flat(closure(s)); }

int FlatLattice::rank_of_flat(ElementSet flat) const {
  auto it = flat_rank_.find(flat.bits());
  return it == flat_rank_.end() ? -1 : it->second;
}

std::vector<ElementSet> flats(const Matroid& m, int k) {
  if (k < 0 || k > m.rank()) {
    throw Error(Errc::rank_out_of_range, "flat rank " + std::to_string(k) + " outside [0, " +
                                             std::to_string(m.rank()) + "]");
  }
  return FlatLattice(m).flats(k);
}

std::vector<ElementSet> hyperplanes(const Matroid& m) { return FlatLattice(m).hyperplanes(); }

namespace {

void circuit_search(const Matroid& m, ElementSet indep, const EchelonBasis& basis, int start,
                    std::vector<ElementSet>& out) {
  for (int e = start; e < m.size(); ++e) {
    if (basis.contains(m.point(e))) {
      // I+e has a unique circuit; it is all of I+e iff no element of I is redundant
      const ElementSet c = indep.with(e);
      const int target = indep.count();
      bool minimal = true;
      for (int x : indep) {
        if (m.rank(c.without(x)) != target) { minimal = false; break; }
      }
      if (minimal) out.push_back(c);
    } else {
      EchelonBasis grown = basis;
      grown.insert(m.point(e));
      circuit_search(m, indep.with(e), grown, e + 1, out);
    }
  }
}

}  // namespace

std::vector<ElementSet> circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  circuit_search(m, ElementSet{}, EchelonBasis(m.field(), m.rank()), 0, out);
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return lex_less(a, b);
  });
  return out;
}

std::vector<ElementSet> cocircuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet h : hyperplanes(m)) out.push_back(m.ground() - h);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

Matroid restrict_to_flat(const Matroid& m, ElementSet flat) {
  if (!flat.subset_of(m.ground())) throw Error(Errc::unknown_label, "subset outside the ground set");
  if (!m.is_flat(flat)) throw Error(Errc::not_a_flat, "restriction target is not a flat");
  return m.restrict_to(flat);
}

Matroid delete_elements(const Matroid& m, ElementSet s) {
  if (!s.subset_of(m.ground())) throw Error(Errc::unknown_label, "subset outside the ground set");
  return m.restrict_to(m.ground() - s);
}

Matroid contract_simplify(const Matroid& m, ElementSet s) {
  if (!s.subset_of(m.ground())) throw Error(Errc::unknown_label, "subset outside the ground set");
  if (s.empty()) return m;
  const Field& f = m.field();
  const int r = m.rank();
  const int n = m.size();

  // rows x columns; eliminate on the contracted columns only
  std::vector<Coords> a(r, Coords(n, 0));
  for (int j = 0; j < n; ++j) {
    auto p = m.point(j);
    for (int i = 0; i < r; ++i) a[i][j] = p[i];
  }
  int k = 0;
  for (int j : s) {
    if (k == r) break;
    int piv = -1;
    for (int i = k; i < r; ++i) {
      if (a[i][j] != 0) { piv = i; break; }
    }
    if (piv < 0) continue;
    std::swap(a[k], a[piv]);
    const Elem inv = f.inv(a[k][j]);
    for (int c = 0; c < n; ++c) a[k][c] = f.mul(a[k][c], inv);
    for (int i = 0; i < r; ++i) {
      if (i == k || a[i][j] == 0) continue;
      const Elem c0 = a[i][j];
      for (int c = 0; c < n; ++c) a[i][c] = f.sub(a[i][c], f.mul(c0, a[k][c]));
    }
    ++k;
  }

  // rows k..r-1 are coordinates in the quotient by span(S)
  std::map<Coords, int> classes;
  std::vector<std::pair<int, Coords>> kept;
  for (int j : m.ground() - s) {
    Coords v(r - k);
    for (int i = k; i < r; ++i) v[i - k] = a[i][j];
    if (!normalize(v, f)) continue;  // loop
    if (classes.emplace(v, j).second) kept.emplace_back(j, std::move(v));
  }
  std::vector<Coords> pts;
  std::vector<std::string> labs;
  for (auto& [j, v] : kept) {
    pts.push_back(std::move(v));
    labs.push_back(m.label(j));
  }
  if (pts.empty()) return Matroid::empty(f);
  return Matroid(f, r - k, std::move(pts), std::move(labs));
}

}  // namespace gfc
