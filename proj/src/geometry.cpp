#include "gfchordal/geometry.hpp"

#include <algorithm>
#include <string>

#include "gfchordal/error.hpp"

namespace gfc {

long long pg_point_count(int r, int q) {
  long long total = 0;
  long long power = 1;
  for (int i = 0; i < r; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

std::vector<Coords> pg_points(int r, const Field& f) {
  if (r < 0) throw Error(Errc::invalid_argument, "negative rank");
  if (r > kMaxDim) throw Error(Errc::too_large, "rank exceeds the supported ambient dimension");
  const int q = f.order();
  if (pg_point_count(r, q) > 4096) throw Error(Errc::too_large, "projective geometry too large");

  std::vector<Coords> out;
  // leading 1 at position lead, zeros before, free entries after
  for (int lead = 0; lead < r; ++lead) {
    const int free = r - lead - 1;
    long long combos = 1;
    for (int i = 0; i < free; ++i) combos *= q;
    for (long long c = 0; c < combos; ++c) {
      Coords v(r, 0);
      v[lead] = 1;
      long long x = c;
      for (int i = r - 1; i > lead; --i) {
        v[i] = static_cast<Elem>(x % q);
        x /= q;
      }
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matroid construct_pg(int r, const Field& f) {
  if (pg_point_count(r, f.order()) > ElementSet::kCapacity) {
    throw Error(Errc::too_large, "PG(" + std::to_string(r - 1) + "," + std::to_string(f.order()) +
                                     ") has more than 64 points");
  }
  if (r == 0) return Matroid::empty(f);
  return Matroid(f, r, pg_points(r, f));
}

Matroid construct_uniform_line(int k, const Field& f) {
  if (k < 2) throw Error(Errc::invalid_argument, "a line needs at least 2 points");
  if (k > f.order() + 1) {
    throw Error(Errc::too_many_points, "U(2," + std::to_string(k) + ") is not GF(" +
                                           std::to_string(f.order()) + ")-representable");
  }
  auto pts = pg_points(2, f);
  pts.resize(k);
  return Matroid(f, 2, std::move(pts));
}

Matroid construct_hyperoval(const Field& f) {
  const int q = f.order();
  if (q % 2 != 0) {
    throw Error(Errc::odd_characteristic,
                "no (q+2)-arc exists in PG(2," + std::to_string(q) + ") for odd q");
  }
  std::vector<Coords> pts;
  for (int t = 0; t < q; ++t) {
    const auto e = static_cast<Elem>(t);
    pts.push_back({1, e, f.mul(e, e)});
  }
  pts.push_back({0, 1, 0});
  pts.push_back({0, 0, 1});
  return Matroid(f, 3, std::move(pts));
}

Matroid construct_pg_minus_flat(int r, int i, const Field& f) {
  if (r < 1 || i < 1 || i > r) {
    throw Error(Errc::index_out_of_range, "P_r \\ P_(r-i) needs 1 <= i <= r (r=" + std::to_string(r) +
                                              ", i=" + std::to_string(i) + ")");
  }
  if (pg_point_count(r, f.order()) > ElementSet::kCapacity) {
    throw Error(Errc::too_large, "ambient projective geometry has more than 64 points");
  }
  std::vector<Coords> kept;
  for (auto& p : pg_points(r, f)) {
    const bool in_flat = std::all_of(p.begin(), p.begin() + i, [](Elem x) { return x == 0; });
    if (!in_flat) kept.push_back(std::move(p));
  }
  return Matroid(f, r, std::move(kept));
}

Matroid construct_mk4() {
  // vertex 4 at the origin, vertex j -> e_j; edge ij -> e_i + e_j
  std::vector<Coords> pts = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  std::vector<std::string> labels = {"14", "24", "34", "12", "13", "23"};
  return Matroid(field_of(2), 3, std::move(pts), std::move(labels));
}

}  // namespace gfc
