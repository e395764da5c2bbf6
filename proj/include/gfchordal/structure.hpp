#pragma once

#include <vector>

#include "gfchordal/matroid.hpp"

namespace gfc {

inline constexpr int kMaxSeparationSize = 24;

/// A partition (X, Y) of E witnessing a vertical k-separation.
struct SeparationReport {
  ElementSet x;
  ElementSet y;
  int k = 0;
  bool exact = false;
  int local_conn = 0;
  ElementSet intersection_flat;  // cl(X) n cl(Y)
};

/// r(X) + r(Y) - r(X u Y).
int local_connectivity(const Matroid& m, ElementSet x, ElementSet y);

/// Every exact vertical k-separation, each unordered partition once with the
/// lowest element in X, sorted lexicographically by X. Throws too_large.
///
/// (X, Y) is a vertical k-separation for some k exactly when both sides are
/// non-spanning, and then it is exact for k = r(X) + r(Y) - r(M) + 1. So the
/// partitions are enumerated as E - H2 <= X <= H1 for pairs of hyperplanes
/// H1, H2 that cover E.
std::vector<SeparationReport> dividers(const Matroid& m);
std::vector<SeparationReport> dividers(const Matroid& m, const FlatLattice& lattice);

/// Which separations a divider is compared against when testing minimality.
enum class MinimalityPool {
  all_vertical,   // any vertical k'-separation, exact or not
  dividers_only,  // exact ones only
};

/// Dividers whose intersection flat has no strictly smaller counterpart in
/// the comparison pool.
std::vector<SeparationReport> minimal_dividers(const Matroid& m,
                                               MinimalityPool pool = MinimalityPool::all_vertical);
std::vector<SeparationReport> minimal_dividers(const Matroid& m, const FlatLattice& lattice,
                                               MinimalityPool pool = MinimalityPool::all_vertical);

/// No two hyperplanes cover E (equivalently, no two disjoint cocircuits).
bool is_round(const Matroid& m);
bool is_round(const FlatLattice& lattice);

}  // namespace gfc
