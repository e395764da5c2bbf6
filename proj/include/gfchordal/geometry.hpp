#pragma once

#include <vector>

#include "gfchordal/field.hpp"
#include "gfchordal/linalg.hpp"
#include "gfchordal/matroid.hpp"

namespace gfc {

/// Normalized points of PG(r-1, q) in lexicographic coordinate order.
std::vector<Coords> pg_points(int r, const Field& f);

/// (q^r - 1) / (q - 1).
long long pg_point_count(int r, int q);

/// P_r = PG(r-1, q) as a matroid on all of its points.
Matroid construct_pg(int r, const Field& f);

/// U_{2,k}: the first k points (lexicographic) of PG(1, q).
Matroid construct_uniform_line(int k, const Field& f);

/// U_{3,q+2} for even q: {(1,t,t^2)} plus (0,1,0) and (0,0,1).
Matroid construct_hyperoval(const Field& f);

/// P_r \ P_{r-i}: PG(r-1, q) minus the rank-(r-i) subspace of points whose
/// first i coordinates vanish. Requires 1 <= i <= r so the result keeps rank r.
Matroid construct_pg_minus_flat(int r, int i, const Field& f);

/// M(K_4) over GF(2), elements labeled by the edges of K_4.
Matroid construct_mk4();

}  // namespace gfc
