#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "gfchordal/field.hpp"

namespace gfc {

using Elem = Field::Elem;
using Coords = std::vector<Elem>;

/// Largest supported ambient dimension (vector length).
inline constexpr int kMaxDim = 32;

/// Scales v so its first nonzero entry is 1. Returns false for the zero vector.
bool normalize(std::span<Elem> v, const Field& f);
bool is_normalized(std::span<const Elem> v);

/// A subspace of GF(q)^dim in row-echelon form, grown one vector at a time.
class EchelonBasis {
 public:
  EchelonBasis(const Field& f, int dim);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Reduces v in place against the basis; true when the residue is zero.
  bool reduce(std::span<Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  /// Adds v if it is independent of the basis; returns whether it was added.
  bool insert(std::span<const Elem> v);

 private:
  const Field* f_;
  int dim_;
  std::vector<std::array<Elem, kMaxDim>> rows_;
  std::vector<int> pivots_;
};

/// Rank of a set of column vectors of length dim.
int column_rank(const Field& f, int dim, const std::vector<std::span<const Elem>>& cols);

/// Re-expresses columns spanning a rank-k subspace as normalized length-k
/// vectors (coordinates in the reduced row space). Deterministic.
std::vector<Coords> trim_to_row_space(const Field& f, int dim, const std::vector<Coords>& cols);

/// Solves basis * x = target for square invertible `basis` given as columns.
std::optional<Coords> solve(const Field& f, const std::vector<Coords>& basis_cols, std::span<const Elem> target);

}  // namespace gfc
