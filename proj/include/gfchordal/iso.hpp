#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfchordal/matroid.hpp"

namespace gfc {

inline constexpr int kMaxCanonicalSize = 24;

/// Relabeling-invariant key of a simple matroid. A simple matroid is
/// determined by its hyperplanes, so the certificate (the hyperplane family
/// under the minimizing relabeling) makes equal keys equivalent to isomorphism.
struct CanonicalForm {
  int size = 0;
  int rank = 0;
  /// profile[k] = sorted sizes of the rank-k flats.
  std::vector<std::vector<int>> profile;
  /// Relabeled hyperplane bitmasks, sorted ascending.
  std::vector<std::uint64_t> certificate;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  /// 16 hex digits (FNV-1a over all fields).
  std::string digest() const;
};

/// Throws Errc::too_large above kMaxCanonicalSize elements.
CanonicalForm canonical_form(const Matroid& m);
CanonicalForm canonical_form(const Matroid& m, const FlatLattice& lattice);

/// Canonical labeling: position of each element in the canonical order.
std::vector<int> canonical_labeling(const Matroid& m, const FlatLattice& lattice);

bool is_isomorphic(const Matroid& a, const Matroid& b);

/// k when M is PG(k-1, q) over its own field; the empty matroid gives 0.
std::optional<int> is_projective_geometry(const Matroid& m);

/// Names a forbidden induced minor for M_q that M is isomorphic to:
/// "U(2,k)" for 2 < k <= q, "U(3,q+2)", and for q = 2 also "M(K4)".
std::optional<std::string> detect_forbidden(const Matroid& m, int q);

/// True when rank r and every r-subset is a basis.
bool is_uniform(const Matroid& m);

}  // namespace gfc
