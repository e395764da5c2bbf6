#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfchordal/matroid.hpp"

namespace gfc {

/// Inputs of a generalized parallel connection P_T(m1, m2). `glue` pairs an
/// m1 label with an m2 label; the m1 side must be a modular flat T and the
/// pairing must be an isomorphism m1|T -> m2|T'.
struct GpcSpec {
  Matroid m1;
  Matroid m2;
  std::vector<std::pair<std::string, std::string>> glue;
};

/// F is modular when r(F) + r(G) = r(F u G) + r(F n G) for every flat G.
/// Throws not_a_flat.
bool is_modular_flat(const Matroid& m, ElementSet flat);
bool is_modular_flat(const FlatLattice& lattice, ElementSet flat);

/// Labels the result of gpc(spec) gives to m2's elements, in m2's order.
/// Glued elements take their m1 label; other m2 labels colliding with an m1
/// label get primes appended until unique.
std::vector<std::string> gpc_m2_labels(const GpcSpec& spec);

/// The represented amalgam: m1's columns sit in the first r1 coordinates,
/// m2 is mapped so the glued columns coincide and its remaining span gets
/// r2 - r(T) fresh coordinates. Empty glue yields the direct sum.
/// Throws precondition_violation or not_representable_amalgam.
Matroid gpc(const GpcSpec& spec);

struct FlatsCheck {
  bool ok = true;
  std::string reason;
  std::optional<std::vector<std::string>> counterexample;
};

/// Compares the flats of P against {F1 u F2 : F1, F2 flats of m1, m2 agreeing
/// on T} and checks r(F) = r(F n E1) + r(F n E2) - r(F n T) on every flat.
FlatsCheck verify_flats_definition(const Matroid& p, const GpcSpec& spec);

}  // namespace gfc
