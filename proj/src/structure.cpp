#include "gfchordal/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "gfchordal/error.hpp"

namespace gfc {

int local_connectivity(const Matroid& m, ElementSet x, ElementSet y) {
  if (!x.subset_of(m.ground()) || !y.subset_of(m.ground())) {
    throw Error(Errc::unknown_label, "subset outside the ground set");
  }
  return m.rank(x) + m.rank(y) - m.rank(x | y);
}

namespace {

// Partitions with both sides non-spanning, X holding the lowest element.
std::vector<ElementSet> non_spanning_partitions(const FlatLattice& lattice) {
  const ElementSet e = lattice.ground();
  const auto& hyps = lattice.hyperplanes();
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t a = 0; a < hyps.size(); ++a) {
    for (std::size_t b = a + 1; b < hyps.size(); ++b) {
      if ((hyps[a] | hyps[b]) != e) continue;
      // X = (E - H2) u S with S inside H1 n H2; the other orientation only
      // yields the complements of these partitions
      const ElementSet shared = hyps[a] & hyps[b];
      const ElementSet forced = e - hyps[b];
      std::uint64_t sub = shared.bits();
      while (true) {
        ElementSet x = forced | ElementSet(sub);
        ElementSet y = e - x;
        if (!x.empty() && !y.empty()) {
          if (!x.contains(e.lowest())) std::swap(x, y);
          seen.insert(x.bits());
        }
        if (sub == 0) break;
        sub = (sub - 1) & shared.bits();
      }
    }
  }
  std::vector<ElementSet> out;
  out.reserve(seen.size());
  for (auto bits : seen) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

void check_size(const Matroid& m) {
  if (m.size() > kMaxSeparationSize) {
    throw Error(Errc::too_large, "separation enumeration is limited to " +
                                     std::to_string(kMaxSeparationSize) + " elements");
  }
}

}  // namespace

std::vector<SeparationReport> dividers(const Matroid& m, const FlatLattice& lattice) {
  check_size(m);
  const int r = lattice.rank();
  std::vector<SeparationReport> out;
  for (ElementSet x : non_spanning_partitions(lattice)) {
    SeparationReport rep;
    rep.x = x;
    rep.y = lattice.ground() - x;
    const int rx = lattice.rank(rep.x);
    const int ry = lattice.rank(rep.y);
    rep.local_conn = rx + ry - r;
    rep.k = rep.local_conn + 1;
    rep.exact = true;
    rep.intersection_flat = lattice.closure(rep.x) & lattice.closure(rep.y);
    out.push_back(rep);
  }
  return out;
}

std::vector<SeparationReport> dividers(const Matroid& m) { return dividers(m, FlatLattice(m)); }

std::vector<SeparationReport> minimal_dividers(const Matroid& m, const FlatLattice& lattice,
                                               MinimalityPool pool) {
  auto divs = dividers(m, lattice);
  // A vertical k'-separation is also an exact one for k'' = local_conn + 1 <= k',
  // so the all_vertical pool ranges over exactly the divider partitions.
  static_cast<void>(pool);
  std::unordered_set<std::uint64_t> flats;
  for (const auto& d : divs) flats.insert(d.intersection_flat.bits());
  std::vector<ElementSet> pool_flats;
  for (auto bits : flats) pool_flats.emplace_back(bits);

  std::vector<SeparationReport> out;
  for (const auto& d : divs) {
    const ElementSet f = d.intersection_flat;
    const bool beaten = std::any_of(pool_flats.begin(), pool_flats.end(),
                                    [&](ElementSet g) { return g != f && g.subset_of(f); });
    if (!beaten) out.push_back(d);
  }
  return out;
}

std::vector<SeparationReport> minimal_dividers(const Matroid& m, MinimalityPool pool) {
  return minimal_dividers(m, FlatLattice(m), pool);
}

bool is_round(const FlatLattice& lattice) {
  const auto& hyps = lattice.hyperplanes();
  for (std::size_t a = 0; a < hyps.size(); ++a) {
    for (std::size_t b = a + 1; b < hyps.size(); ++b) {
      if ((hyps[a] | hyps[b]) == lattice.ground()) return false;
    }
  }
  return true;
}

bool is_round(const Matroid& m) { return is_round(FlatLattice(m)); }

}  // namespace gfc
