#include "gfchordal/chordal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "gfchordal/error.hpp"
#include "gfchordal/gpc.hpp"

namespace gfc {

int ConstructionCertificate::leaf_count() const {
  if (kind != Kind::join) return 1;
  int c = 0;
  for (const auto& ch : children) c += ch.leaf_count();
  return c;
}

DecompositionResult decompose(const Matroid& m, LeafMode mode,
                              const std::function<std::size_t(std::size_t)>& pick) {
  DecompositionResult result;
  const FlatLattice lattice(m);
  if (is_round(lattice)) {
    const auto pg = is_projective_geometry(m);
    if (mode == LeafMode::projective && !pg) {
      result.failed_split_ground = m.labels();
      return result;
    }
    ConstructionCertificate leaf;
    leaf.kind = mode == LeafMode::projective ? ConstructionCertificate::Kind::pg_leaf
                                             : ConstructionCertificate::Kind::round_leaf;
    leaf.elements = m.labels();
    leaf.pg_rank = m.rank();
    result.ok = true;
    result.certificate = std::move(leaf);
    return result;
  }

  const auto mins = minimal_dividers(m, lattice);
  const std::size_t choice = pick ? pick(mins.size()) % mins.size() : 0;
  const SeparationReport& split = mins[choice];
  const Matroid glue = m.restrict_to(split.intersection_flat);
  const auto glue_pg = is_projective_geometry(glue);
  if (!glue_pg || *glue_pg != split.local_conn) {
    result.failed_split = split;
    result.failed_split_ground = m.labels();
    return result;
  }

  ConstructionCertificate join;
  join.kind = ConstructionCertificate::Kind::join;
  join.elements = m.labels();
  join.glue = m.labels_of(split.intersection_flat);
  join.glue_rank = *glue_pg;
  for (ElementSet side : {lattice.closure(split.x), lattice.closure(split.y)}) {
    auto part = decompose(m.restrict_to(side), mode, pick);
    if (!part.ok) return part;
    join.children.push_back(std::move(*part.certificate));
  }
  result.ok = true;
  result.certificate = std::move(join);
  return result;
}

std::optional<ForbiddenWitness> find_forbidden_induced_minor(const Matroid& m) {
  const int q = m.q();
  const FlatLattice lattice(m);
  for (int k = 0; k + 2 <= lattice.rank(); ++k) {
    for (ElementSet c : lattice.flats(k)) {
      const Matroid contracted = contract_simplify(m, c);
      const FlatLattice inner(contracted);
      for (int kk = 2; kk <= std::min(3, inner.rank()); ++kk) {
        for (ElementSet g : inner.flats(kk)) {
          const int n = g.count();
          const bool candidate = kk == 2 ? (n >= 3 && n <= q) : (n == q + 2 || (q == 2 && n == 6));
          if (!candidate) continue;
          if (auto name = detect_forbidden(contracted.restrict_to(g), q)) {
            return ForbiddenWitness{m.labels_of(c), contracted.labels_of(g), *name};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// rejection witnesses need canonical forms, so both deciders share that bound
void check_decider_size(const Matroid& m) {
  if (m.size() > kMaxCanonicalSize) {
    throw Error(Errc::too_large, "deciders are limited to " + std::to_string(kMaxCanonicalSize) + " elements");
  }
}

}  // namespace

ChordalResult is_gfq_chordal(const Matroid& m) {
  check_decider_size(m);
  ChordalResult out;
  auto d = decompose(m, LeafMode::projective);
  if (d.ok) {
    out.member = true;
    out.construction = std::move(d.certificate);
    return out;
  }
  out.failed_split = d.failed_split;
  out.failed_split_ground = std::move(d.failed_split_ground);
  out.witness = find_forbidden_induced_minor(m);
  return out;
}

bool nq_definition_holds(const Matroid& m, SeparationReport* failing) {
  for (const auto& d : minimal_dividers(m)) {
    const auto pg = is_projective_geometry(m.restrict_to(d.intersection_flat));
    if (!pg || *pg != d.local_conn) {
      if (failing != nullptr) *failing = d;
      return false;
    }
  }
  return true;
}

NqResult is_nq(const Matroid& m) {
  check_decider_size(m);
  NqResult out;
  SeparationReport failing;
  if (!nq_definition_holds(m, &failing)) {
    out.failing = failing;
    return out;
  }
  out.member = true;
  auto d = decompose(m, LeafMode::round);
  if (d.ok) out.construction = std::move(d.certificate);
  return out;
}

namespace {

void check_minor_size(const Matroid& m) {
  if (m.size() > kMaxInducedMinorSize) {
    throw Error(Errc::too_large, "induced-minor search is limited to " +
                                     std::to_string(kMaxInducedMinorSize) + " elements");
  }
}

}  // namespace

std::set<CanonicalForm> induced_minors(const Matroid& m, int max_size) {
  check_minor_size(m);
  std::set<CanonicalForm> seen;
  std::deque<Matroid> queue;
  auto visit = [&](Matroid x, const FlatLattice& lat) {
    if (seen.insert(canonical_form(x, lat)).second) queue.push_back(std::move(x));
  };
  visit(m, FlatLattice(m));
  while (!queue.empty()) {
    const Matroid x = std::move(queue.front());
    queue.pop_front();
    const FlatLattice lat(x);
    for (int k = 0; k < lat.rank(); ++k) {
      for (ElementSet f : lat.flats(k)) {
        Matroid y = x.restrict_to(f);
        const FlatLattice ylat(y);
        visit(std::move(y), ylat);
      }
    }
    for (int e = 0; e < x.size(); ++e) {
      Matroid y = contract_simplify(x, ElementSet::single(e));
      const FlatLattice ylat(y);
      visit(std::move(y), ylat);
    }
  }
  std::set<CanonicalForm> out;
  for (const auto& cf : seen) {
    if (cf.size <= max_size) out.insert(cf);
  }
  return out;
}

std::set<CanonicalForm> induced_minors_normal_form(const Matroid& m, int max_size) {
  check_minor_size(m);
  std::set<CanonicalForm> out;
  const FlatLattice lattice(m);
  for (int k = 0; k <= lattice.rank(); ++k) {
    for (ElementSet c : lattice.flats(k)) {
      const Matroid contracted = contract_simplify(m, c);
      const FlatLattice inner(contracted);
      for (int kk = 0; kk <= inner.rank(); ++kk) {
        for (ElementSet g : inner.flats(kk)) {
          if (g.count() > max_size) continue;
          const Matroid minor = contracted.restrict_to(g);
          out.insert(canonical_form(minor, FlatLattice(minor)));
        }
      }
    }
  }
  return out;
}

bool cfk_chordal(const Matroid& m) {
  check_minor_size(m);
  const auto circs = circuits(m);
  std::unordered_set<std::uint64_t> is_circuit;
  for (ElementSet c : circs) is_circuit.insert(c.bits());
  for (ElementSet c : circs) {
    if (c.count() < 4) continue;
    bool splits = false;
    for (ElementSet c1 : circs) {
      const ElementSet outside = c1 - c;
      if (outside.count() != 1) continue;
      const ElementSet inside = c1 & c;
      if (inside == c) continue;
      const ElementSet c2 = (c - inside) | outside;
      if (is_circuit.count(c2.bits()) != 0) {
        splits = true;
        break;
      }
    }
    if (!splits) return false;
  }
  return true;
}

Matroid replay(const Matroid& m, const ConstructionCertificate& cert) {
  if (cert.kind != ConstructionCertificate::Kind::join) {
    return m.restrict_to(m.elements(cert.elements));
  }
  GpcSpec spec{replay(m, cert.children.at(0)), replay(m, cert.children.at(1)), {}};
  for (const auto& l : cert.glue) spec.glue.emplace_back(l, l);
  return gpc(spec);
}

}  // namespace gfc
