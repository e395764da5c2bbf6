#include "gfchordal/gpc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "gfchordal/error.hpp"

namespace gfc {

bool is_modular_flat(const FlatLattice& lattice, ElementSet flat) {
  const int rf = lattice.rank_of_flat(flat);
  if (rf < 0) throw Error(Errc::not_a_flat, "modularity is only defined for flats");
  for (int k = 0; k <= lattice.rank(); ++k) {
    for (ElementSet g : lattice.flats(k)) {
      if (rf + k != lattice.rank(flat | g) + lattice.rank_of_flat(flat & g)) return false;
    }
  }
  return true;
}

bool is_modular_flat(const Matroid& m, ElementSet flat) {
  if (!flat.subset_of(m.ground())) throw Error(Errc::unknown_label, "subset outside the ground set");
  return is_modular_flat(FlatLattice(m), flat);
}

std::vector<std::string> gpc_m2_labels(const GpcSpec& spec) {
  std::map<std::string, std::string> glued;  // m2 label -> m1 label
  for (const auto& [a, b] : spec.glue) glued[b] = a;
  std::set<std::string> taken(spec.m1.labels().begin(), spec.m1.labels().end());
  std::vector<std::string> out;
  for (const auto& l : spec.m2.labels()) {
    if (auto it = glued.find(l); it != glued.end()) {
      out.push_back(it->second);
      continue;
    }
    std::string name = l;
    while (taken.count(name) != 0) name += "'";
    taken.insert(name);
    out.push_back(name);
  }
  return out;
}

namespace {

struct Glue {
  ElementSet t1;
  ElementSet t2;
  std::vector<int> to_m2;  // m1 index -> m2 index, -1 off the glue
};

Glue resolve_glue(const GpcSpec& spec) {
  Glue g{ElementSet{}, ElementSet{}, std::vector<int>(spec.m1.size(), -1)};
  for (const auto& [a, b] : spec.glue) {
    const int i = spec.m1.index_of(a);
    const int j = spec.m2.index_of(b);
    if (g.t1.contains(i) || g.t2.contains(j)) {
      throw Error(Errc::precondition_violation, "glue is not a bijection");
    }
    g.t1 = g.t1.with(i);
    g.t2 = g.t2.with(j);
    g.to_m2[i] = j;
  }
  return g;
}

// flats of m|t as sets of indices of m
std::set<std::uint64_t> flats_within(const Matroid& m, ElementSet t) {
  const Matroid sub = m.restrict_to(t);
  std::vector<int> back;
  for (int i : t) back.push_back(i);
  std::set<std::uint64_t> out;
  const FlatLattice lat(sub);
  for (int k = 0; k <= lat.rank(); ++k) {
    for (ElementSet f : lat.flats(k)) {
      std::uint64_t bits = 0;
      for (int e : f) bits |= std::uint64_t{1} << back[e];
      out.insert(bits);
    }
  }
  return out;
}

bool glue_is_isomorphism(const GpcSpec& spec, const Glue& g) {
  std::set<std::uint64_t> mapped;
  for (auto bits : flats_within(spec.m1, g.t1)) {
    std::uint64_t img = 0;
    for (int i : ElementSet(bits)) img |= std::uint64_t{1} << g.to_m2[i];
    mapped.insert(img);
  }
  return mapped == flats_within(spec.m2, g.t2);
}

}  // namespace

Matroid gpc(const GpcSpec& spec) {
  const Matroid& m1 = spec.m1;
  const Matroid& m2 = spec.m2;
  if (m1.q() != m2.q()) throw Error(Errc::precondition_violation, "matroids are over different fields");
  const Field& f = m1.field();
  const Glue g = resolve_glue(spec);
  if (!m1.is_flat(g.t1) || !m2.is_flat(g.t2)) {
    throw Error(Errc::precondition_violation, "glued sets must be flats on both sides");
  }
  if (!glue_is_isomorphism(spec, g)) {
    throw Error(Errc::precondition_violation, "glue bijection is not an isomorphism of the restrictions");
  }
  if (!is_modular_flat(m1, g.t1)) {
    throw Error(Errc::precondition_violation, "glued flat is not modular in the first matroid");
  }

  const int r1 = m1.rank();
  const int r2 = m2.rank();

  // basis of T in m1, its image in m2, extended to a basis of m2
  std::vector<int> b1;
  {
    EchelonBasis eb(f, r1);
    for (int i : g.t1) {
      if (eb.insert(m1.point(i))) b1.push_back(i);
    }
  }
  const int t = static_cast<int>(b1.size());
  std::vector<int> basis2;
  {
    EchelonBasis eb(f, r2);
    for (int i : b1) {
      eb.insert(m2.point(g.to_m2[i]));
      basis2.push_back(g.to_m2[i]);
    }
    for (int j = 0; j < m2.size(); ++j) {
      if (eb.insert(m2.point(j))) basis2.push_back(j);
    }
  }

  const int out_dim = r1 + r2 - t;
  if (out_dim > kMaxDim) throw Error(Errc::too_large, "amalgam exceeds the supported dimension");

  for (int s = 0; s < f.degree(); ++s) {
    std::vector<Coords> w(m2.size());
    for (int j = 0; j < m2.size(); ++j) {
      auto p = m2.point(j);
      w[j].resize(r2);
      for (int i = 0; i < r2; ++i) w[j][i] = f.frobenius(p[i], s);
    }
    std::vector<Coords> basis_cols;
    for (int j : basis2) basis_cols.push_back(w[j]);
    std::vector<Coords> alpha(m2.size());
    for (int j = 0; j < m2.size(); ++j) {
      auto a = solve(f, basis_cols, w[j]);
      if (!a) throw Error(Errc::not_representable_amalgam, "second representation is not full rank");
      alpha[j] = std::move(*a);
    }

    // image of an m2 vector under the basis change with scalings lambda
    auto image = [&](int j, const Coords& lambda) {
      Coords v(out_dim, 0);
      for (int i = 0; i < t; ++i) {
        const Elem c = f.mul(alpha[j][i], lambda[i]);
        if (c == 0) continue;
        auto base = m1.point(b1[i]);
        for (int k = 0; k < r1; ++k) v[k] = f.add(v[k], f.mul(c, base[k]));
      }
      for (int i = t; i < r2; ++i) v[r1 + i - t] = alpha[j][i];
      normalize(v, f);
      return v;
    };

    Coords lambda(t, 1);
    while (true) {
      bool agrees = true;
      for (int i : g.t1) {
        Coords want(out_dim, 0);
        auto p = m1.point(i);
        std::copy(p.begin(), p.end(), want.begin());
        if (image(g.to_m2[i], lambda) != want) { agrees = false; break; }
      }
      if (agrees) {
        std::vector<Coords> pts;
        std::vector<std::string> labels = m1.labels();
        for (int i = 0; i < m1.size(); ++i) {
          Coords v(out_dim, 0);
          auto p = m1.point(i);
          std::copy(p.begin(), p.end(), v.begin());
          pts.push_back(std::move(v));
        }
        const auto m2_labels = gpc_m2_labels(spec);
        for (int j = 0; j < m2.size(); ++j) {
          if (g.t2.contains(j)) continue;
          pts.push_back(image(j, lambda));
          labels.push_back(m2_labels[j]);
        }
        return Matroid(f, out_dim, std::move(pts), std::move(labels));
      }
      // next scaling vector; lambda[0] stays 1
      int pos = t - 1;
      while (pos >= 1 && lambda[pos] == f.order() - 1) lambda[pos--] = 1;
      if (pos < 1) break;
      ++lambda[pos];
    }
  }
  throw Error(Errc::not_representable_amalgam,
              "no projective map carries the glued columns of the second matroid onto the first");
}

FlatsCheck verify_flats_definition(const Matroid& p, const GpcSpec& spec) {
  FlatsCheck result;
  ElementSet e1, e2, tt;
  std::vector<int> m1_to_p(spec.m1.size()), m2_to_p(spec.m2.size());
  for (int i = 0; i < spec.m1.size(); ++i) {
    m1_to_p[i] = p.index_of(spec.m1.label(i));
    e1 = e1.with(m1_to_p[i]);
  }
  const auto m2_labels = gpc_m2_labels(spec);
  for (int j = 0; j < spec.m2.size(); ++j) {
    m2_to_p[j] = p.index_of(m2_labels[j]);
    e2 = e2.with(m2_to_p[j]);
  }
  for (const auto& pair : spec.glue) tt = tt.with(p.index_of(pair.first));

  auto mapped_flats = [](const Matroid& m, const std::vector<int>& to_p) {
    std::vector<ElementSet> out;
    const FlatLattice lat(m);
    for (int k = 0; k <= lat.rank(); ++k) {
      for (ElementSet fl : lat.flats(k)) {
        ElementSet img;
        for (int e : fl) img = img.with(to_p[e]);
        out.push_back(img);
      }
    }
    return out;
  };
  const auto f1 = mapped_flats(spec.m1, m1_to_p);
  const auto f2 = mapped_flats(spec.m2, m2_to_p);
  std::unordered_set<std::uint64_t> predicted;
  for (ElementSet a : f1) {
    for (ElementSet b : f2) {
      if ((a & tt) == (b & tt)) predicted.insert((a | b).bits());
    }
  }

  const FlatLattice lat(p);
  std::unordered_set<std::uint64_t> actual;
  for (int k = 0; k <= lat.rank(); ++k) {
    for (ElementSet fl : lat.flats(k)) {
      actual.insert(fl.bits());
      const int lhs = k;
      const int rhs = lat.rank(fl & e1) + lat.rank(fl & e2) - lat.rank(fl & tt);
      if (lhs != rhs && result.ok) {
        result.ok = false;
        result.reason = "rank identity fails on a flat";
        result.counterexample = p.labels_of(fl);
      }
      if (predicted.count(fl.bits()) == 0 && result.ok) {
        result.ok = false;
        result.reason = "flat of the amalgam is not predicted by the flats of the parts";
        result.counterexample = p.labels_of(fl);
      }
    }
  }
  if (result.ok) {
    for (auto bits : predicted) {
      if (actual.count(bits) == 0) {
        result.ok = false;
        result.reason = "predicted flat is not a flat of the amalgam";
        result.counterexample = p.labels_of(ElementSet(bits));
        break;
      }
    }
  }
  return result;
}

}  // namespace gfc
