#include "gfchordal/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gfchordal/error.hpp"
#include "gfchordal/geometry.hpp"
#include "gfchordal/linalg.hpp"

namespace gfc {

GroupAction::GroupAction(int points, std::vector<std::uint8_t> perms)
    : n_(points), perms_(std::move(perms)) {}

std::string GroupAction::checksum() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto b : perms_) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GroupAction group_elements(int r, const Field& f) {
  const int q = f.order();
  const bool allowed = r >= 0 && ((q == 2 && r <= 4) || ((q == 3 || q == 4) && r <= 3));
  if (!allowed) {
    throw Error(Errc::too_large, "group action limited to r <= 4 over GF(2) and r <= 3 over GF(3), GF(4)");
  }
  const auto pts = pg_points(r, f);
  const int n = static_cast<int>(pts.size());
  if (n == 0) return GroupAction(0, {});
  std::map<Coords, int> index;
  for (int i = 0; i < n; ++i) index.emplace(pts[i], i);

  std::set<std::vector<std::uint8_t>> perms;
  const int cells = r * r;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= q;

  std::vector<Elem> a(cells);
  for (long long code = 0; code < total; ++code) {
    long long x = code;
    for (int i = 0; i < cells; ++i) {
      a[i] = static_cast<Elem>(x % q);
      x /= q;
    }
    // one matrix per scalar class: first nonzero entry is 1
    if (!is_normalized(a)) continue;
    std::vector<Coords> cols(r, Coords(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) cols[j][i] = a[i * r + j];
    std::vector<std::span<const Elem>> views(cols.begin(), cols.end());
    if (column_rank(f, r, views) != r) continue;

    for (int s = 0; s < f.degree(); ++s) {
      std::vector<std::uint8_t> perm(n);
      for (int p = 0; p < n; ++p) {
        Coords img(r, 0);
        for (int i = 0; i < r; ++i) {
          Elem acc = 0;
          for (int j = 0; j < r; ++j) acc = f.add(acc, f.mul(a[i * r + j], pts[p][j]));
          img[i] = f.frobenius(acc, s);
        }
        normalize(img, f);
        perm[p] = static_cast<std::uint8_t>(index.at(img));
      }
      perms.insert(std::move(perm));
    }
  }
  std::vector<std::uint8_t> flat;
  flat.reserve(perms.size() * n);
  for (const auto& p : perms) flat.insert(flat.end(), p.begin(), p.end());
  return GroupAction(n, std::move(flat));
}

std::uint64_t minimal_image(std::uint64_t mask, const GroupAction& group) {
  std::uint64_t best = mask;
  for (std::size_t g = 0; g < group.order(); ++g) best = std::min(best, group.apply(g, mask));
  return best;
}

namespace {

// Zero when some image is smaller; otherwise the orbit size.
std::uint64_t orbit_size_if_minimal(std::uint64_t mask, const GroupAction& group) {
  std::uint64_t stabilizer = 0;
  for (std::size_t g = 0; g < group.order(); ++g) {
    const std::uint64_t img = group.apply(g, mask);
    if (img < mask) return 0;
    if (img == mask) ++stabilizer;
  }
  return group.order() / stabilizer;
}

void check_exhaustive(const GroupAction& group) {
  if (group.points() > 24) throw Error(Errc::too_large, "exhaustive sweep limited to 24 points");
}

}  // namespace

std::vector<OrbitRecord> orbit_representatives_serial(const GroupAction& group) {
  check_exhaustive(group);
  const std::uint64_t total = std::uint64_t{1} << group.points();
  std::vector<OrbitRecord> out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (auto size = orbit_size_if_minimal(mask, group)) out.push_back({mask, size});
  }
  return out;
}

std::vector<OrbitRecord> orbit_representatives(const GroupAction& group) {
  check_exhaustive(group);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << group.points());
  std::vector<OrbitRecord> out;
#pragma omp parallel
  {
    std::vector<OrbitRecord> local;
#pragma omp for schedule(dynamic, 1024) nowait
    for (std::int64_t mask = 0; mask < total; ++mask) {
      const auto m = static_cast<std::uint64_t>(mask);
      if (auto size = orbit_size_if_minimal(m, group)) local.push_back({m, size});
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) { return a.mask < b.mask; });
  return out;
}

Matroid subset_matroid(int r, const Field& f, std::uint64_t mask) {
  const auto pts = pg_points(r, f);
  std::vector<Coords> chosen;
  std::vector<std::string> labels;
  for (int i : ElementSet(mask)) {
    chosen.push_back(pts[i]);
    labels.push_back("p" + std::to_string(i));
  }
  if (chosen.empty()) return Matroid::empty(f);
  return Matroid(f, r, std::move(chosen), std::move(labels));
}

namespace {

OrbitCatalog catalog_from(int r, const Field& f, const GroupAction& group,
                          const std::vector<OrbitRecord>& reps, bool spanning_only) {
  OrbitCatalog cat;
  cat.q = f.order();
  cat.r = r;
  cat.group_order = group.order();
  cat.group_checksum = group.checksum();
  cat.all_orbit_count = reps.size();
  for (const auto& rec : reps) {
    cat.all_orbit_sum += rec.orbit_size;
    Matroid m = subset_matroid(r, f, rec.mask);
    const bool spanning = m.rank() == r;
    if (spanning_only && !spanning) continue;
    cat.entries.push_back({rec.mask, rec.orbit_size, spanning, std::move(m)});
  }
  return cat;
}

}  // namespace

OrbitCatalog enumerate_matroids(int r, const Field& f, bool spanning_only) {
  const GroupAction group = group_elements(r, f);
  return catalog_from(r, f, group, orbit_representatives(group), spanning_only);
}

OrbitCatalog sample_matroids(int r, const Field& f, std::size_t samples, std::uint64_t seed,
                             bool spanning_only) {
  const GroupAction group = group_elements(r, f);
  const int n = group.points();
  if (n > 24) throw Error(Errc::too_large, "sampling limited to 24 points");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  // orbit id per subset, filled one whole orbit at a time
  std::vector<std::int32_t> orbit_of(std::size_t{1} << n, -1);
  std::vector<OrbitRecord> reps;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::uint64_t mask = rng() & full;
    if (orbit_of[mask] >= 0) continue;
    const auto id = static_cast<std::int32_t>(reps.size());
    std::uint64_t least = mask;
    std::uint64_t size = 0;
    for (std::size_t g = 0; g < group.order(); ++g) {
      const std::uint64_t img = group.apply(g, mask);
      if (orbit_of[img] < 0) {
        orbit_of[img] = id;
        ++size;
      }
      least = std::min(least, img);
    }
    reps.push_back({least, size});
  }
  std::sort(reps.begin(), reps.end(), [](const OrbitRecord& a, const OrbitRecord& b) { return a.mask < b.mask; });
  OrbitCatalog cat = catalog_from(r, f, group, reps, spanning_only);
  cat.samples = samples;
  return cat;
}

}  // namespace gfc
