#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gfchordal/element_set.hpp"
#include "gfchordal/field.hpp"
#include "gfchordal/linalg.hpp"

namespace gfc {

/// A simple GF(q)-represented matroid: distinct normalized nonzero columns
/// (the "green" points inside the ambient projective geometry), each with a
/// stable string label. The representation is always stored at full row rank,
/// so rank() is both the vector length and the matroid rank.
class Matroid {
 public:
  /// Validates the columns and trims the ambient space to their span.
  /// Empty `labels` means default labels "e0", "e1", ...
  Matroid(const Field& field, int ambient_dim, std::vector<Coords> points,
          std::vector<std::string> labels = {});

  /// The rank-0 matroid on no elements.
  static Matroid empty(const Field& field);

  const Field& field() const { return *field_; }
  int q() const { return field_->order(); }
  int size() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground() const { return ElementSet::first(n_); }

  std::span<const Elem> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * rank_, static_cast<std::size_t>(rank_)};
  }
  std::vector<Coords> points() const;

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws Errc::unknown_label.
  int index_of(std::string_view label) const;
  ElementSet elements(std::span<const std::string> labels) const;
  ElementSet elements(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  int rank(ElementSet s) const;
  ElementSet closure(ElementSet s) const;
  bool is_flat(ElementSet s) const { return closure(s) == s; }

  /// Submatroid on `keep`, re-trimmed when its rank drops. No flat check.
  Matroid restrict_to(ElementSet keep) const;

 private:
  Matroid() = default;
  void build_index();

  const Field* field_ = nullptr;
  int n_ = 0;
  int rank_ = 0;
  std::vector<Elem> coords_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// All rank-k flats in lexicographic element order. Throws rank_out_of_range.
std::vector<ElementSet> flats(const Matroid& m, int k);
std::vector<ElementSet> hyperplanes(const Matroid& m);
/// Minimal dependent sets, ordered by size then lexicographically.
std::vector<ElementSet> circuits(const Matroid& m);
std::vector<ElementSet> cocircuits(const Matroid& m);

/// Restriction to a flat; throws not_a_flat for anything else.
Matroid restrict_to_flat(const Matroid& m, ElementSet flat);
Matroid delete_elements(const Matroid& m, ElementSet s);
/// si(M/S): projects away span(S), drops loops, keeps the lowest-index
/// element of each parallel class.
Matroid contract_simplify(const Matroid& m, ElementSet s);

/// Precomputed flats of one matroid. Closure and rank become hyperplane
/// intersections and table lookups.
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& m);

  int rank() const { return static_cast<int>(by_rank_.size()) - 1; }
  ElementSet ground() const { return ground_; }
  const std::vector<ElementSet>& flats(int k) const { return by_rank_[k]; }
  const std::vector<ElementSet>& hyperplanes() const { return hyperplanes_; }
  std::size_t flat_count() const;

  ElementSet closure(ElementSet s) const;
  int rank(ElementSet s) const;
  int rank_of_flat(ElementSet flat) const;

 private:
  ElementSet ground_;
  std::vector<std::vector<ElementSet>> by_rank_;
  std::vector<ElementSet> hyperplanes_;
  std::unordered_map<std::uint64_t, int> flat_rank_;
};

}  // namespace gfc
