#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gfchordal/iso.hpp"
#include "gfchordal/matroid.hpp"
#include "gfchordal/structure.hpp"

namespace gfc {

inline constexpr int kMaxInducedMinorSize = 16;

/// Decomposition tree. Leaves are projective geometries (M_q mode) or round
/// matroids (N_q mode); a join glues its two children along a projective flat.
/// Element sets are stored as labels of the decomposed matroid.
struct ConstructionCertificate {
  enum class Kind { pg_leaf, round_leaf, join };

  Kind kind = Kind::pg_leaf;
  std::vector<std::string> elements;
  int pg_rank = 0;                     // leaf: rank of the PG (pg_leaf) or of the leaf
  std::vector<std::string> glue;       // join: cl(X) n cl(Y)
  int glue_rank = 0;
  std::vector<ConstructionCertificate> children;  // join: M|cl(X), M|cl(Y)

  int leaf_count() const;
};

/// An induced minor si(M/C)|G isomorphic to a named forbidden matroid.
struct ForbiddenWitness {
  std::vector<std::string> contract_flat;  // labels of M
  std::vector<std::string> restrict_flat;  // labels of si(M/C)
  std::string target;
};

struct ChordalResult {
  bool member = false;
  std::optional<ConstructionCertificate> construction;
  std::optional<ForbiddenWitness> witness;
  /// The split that failed, when the decomposition rejected.
  std::optional<SeparationReport> failed_split;
  /// Labels of the matroid the failed split refers to (a restriction of M).
  std::vector<std::string> failed_split_ground;
};

struct DecompositionResult {
  bool ok = false;
  std::optional<ConstructionCertificate> certificate;
  std::optional<SeparationReport> failed_split;
  std::vector<std::string> failed_split_ground;
};

enum class LeafMode { projective, round };

/// Recursive splitting along the first minimal divider: accept a round part
/// iff it is a projective geometry (projective mode) or always (round mode);
/// reject when a glue cl(X) n cl(Y) is not a PG of rank local_conn(X, Y).
/// `pick` selects which minimal divider to split on (default: the first).
DecompositionResult decompose(const Matroid& m, LeafMode mode,
                              const std::function<std::size_t(std::size_t)>& pick = {});

/// si(M/C)|G over flats C of M (by rank, then lexicographic) and rank-2/3
/// flats G of si(M/C); the first match of detect_forbidden(., q(M)).
std::optional<ForbiddenWitness> find_forbidden_induced_minor(const Matroid& m);

/// M_q membership: decomposition decides, a forbidden witness accompanies
/// every rejection when one exists.
ChordalResult is_gfq_chordal(const Matroid& m);

struct NqResult {
  bool member = false;
  std::optional<ConstructionCertificate> construction;
  std::optional<SeparationReport> failing;
};

/// Direct check: every minimal divider has a projective intersection flat of
/// rank local_conn. On success the certificate is the round-leaf decomposition.
NqResult is_nq(const Matroid& m);
bool nq_definition_holds(const Matroid& m, SeparationReport* failing = nullptr);

/// Canonical forms of all induced minors with at most max_size elements,
/// by breadth-first closure under restriction to a flat and single-element
/// contraction. Throws too_large above kMaxInducedMinorSize elements.
std::set<CanonicalForm> induced_minors(const Matroid& m, int max_size);

/// {si(M/C)|G : C a flat of M, G a flat of si(M/C)}, as canonical forms.
std::set<CanonicalForm> induced_minors_normal_form(const Matroid& m, int max_size);

/// Every circuit C with |C| >= 4 is (C1 u C2) - e for circuits C1 n C2 = {e}.
bool cfk_chordal(const Matroid& m);

/// Rebuilds a matroid from a certificate by gpc joins over restrictions of m.
Matroid replay(const Matroid& m, const ConstructionCertificate& cert);

}  // namespace gfc
