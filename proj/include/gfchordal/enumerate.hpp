#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gfchordal/field.hpp"
#include "gfchordal/matroid.hpp"

namespace gfc {

/// PGammaL(r, q) acting on the points of PG(r-1, q) (in pg_points order), as
/// a deduplicated, lexicographically sorted list of permutations.
class GroupAction {
 public:
  GroupAction(int points, std::vector<std::uint8_t> perms);

  int points() const { return n_; }
  std::size_t order() const { return n_ == 0 ? 1 : perms_.size() / n_; }
  std::span<const std::uint8_t> element(std::size_t g) const {
    return {perms_.data() + g * n_, static_cast<std::size_t>(n_)};
  }

  std::uint64_t apply(std::size_t g, std::uint64_t mask) const {
    const std::uint8_t* p = perms_.data() + g * n_;
    std::uint64_t out = 0;
    while (mask != 0) {
      out |= std::uint64_t{1} << p[__builtin_ctzll(mask)];
      mask &= mask - 1;
    }
    return out;
  }

  /// FNV-1a over the permutation table, 16 hex digits.
  std::string checksum() const;

 private:
  int n_;
  std::vector<std::uint8_t> perms_;
};

/// Throws too_large outside r <= 4 for q = 2 and r <= 3 for q in {3, 4}.
GroupAction group_elements(int r, const Field& f);

/// A subset of PG points that is the numerically least member of its orbit.
struct OrbitRecord {
  std::uint64_t mask = 0;
  std::uint64_t orbit_size = 0;
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// Least element of the orbit of `mask`.
std::uint64_t minimal_image(std::uint64_t mask, const GroupAction& group);

/// Serial minimal-image sweep over all 2^n subsets; the reference kernel.
std::vector<OrbitRecord> orbit_representatives_serial(const GroupAction& group);

/// OpenMP version of the same sweep; identical output.
std::vector<OrbitRecord> orbit_representatives(const GroupAction& group);

struct OrbitEntry {
  std::uint64_t mask = 0;
  std::uint64_t orbit_size = 0;
  bool spanning = false;
  Matroid matroid;
};

struct OrbitCatalog {
  int q = 0;
  int r = 0;
  std::size_t group_order = 0;
  std::string group_checksum;
  /// Orbit count and orbit-size sum over all subsets, spanning or not.
  std::size_t all_orbit_count = 0;
  std::uint64_t all_orbit_sum = 0;
  /// Samples drawn (0 for exhaustive catalogs).
  std::size_t samples = 0;
  std::vector<OrbitEntry> entries;
};

/// Matroid on the PG points selected by mask, labeled by point index ("p3").
Matroid subset_matroid(int r, const Field& f, std::uint64_t mask);

/// Exhaustive catalog of orbit representatives. Throws too_large beyond 24 points.
OrbitCatalog enumerate_matroids(int r, const Field& f, bool spanning_only);

/// Orbit representatives hit by `samples` uniformly random subsets, seeded.
OrbitCatalog sample_matroids(int r, const Field& f, std::size_t samples, std::uint64_t seed,
                             bool spanning_only);

}  // namespace gfc
