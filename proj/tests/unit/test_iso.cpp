#include <doctest.h>

#include <random>

#include "gfchordal/error.hpp"
#include "gfchordal/geometry.hpp"
#include "gfchordal/iso.hpp"
#include "oracles.hpp"

using namespace gfc;

namespace {

Matroid shuffled(const Matroid& m, std::mt19937_64& rng) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Coords> pts;
  std::vector<std::string> labels;
  for (int i : perm) {
    const auto p = m.point(i);
    pts.emplace_back(p.begin(), p.end());
    labels.push_back(m.label(i));
  }
  if (pts.empty()) return m;
  return Matroid(m.field(), m.rank(), std::move(pts), std::move(labels));
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(3);
  const Matroid f7 = construct_pg(3, field_of(2));
  for (int t = 0; t < 5; ++t) CHECK(canonical_form(shuffled(f7, rng)) == canonical_form(f7));
  for (const Matroid& m : oracle::small_corpus(16)) {
    CHECK(canonical_form(shuffled(m, rng)) == canonical_form(m));
  }
  const Matroid h8 = construct_hyperoval(field_of(8));
  CHECK(canonical_form(shuffled(h8, rng)) == canonical_form(h8));
}

TEST_CASE("canonical form separates the named examples") {
  const Matroid f7 = construct_pg(3, field_of(2));
  const Matroid mk4 = construct_mk4();
  const Matroid oval = construct_hyperoval(field_of(4));
  CHECK(canonical_form(mk4) != canonical_form(oval));
  CHECK_FALSE(is_isomorphic(mk4, oval));
  CHECK(canonical_form(delete_elements(f7, ElementSet::single(0))) == canonical_form(mk4));
  CHECK(is_isomorphic(construct_pg_minus_flat(3, 2, field_of(2)), mk4));
  CHECK(is_isomorphic(construct_uniform_line(3, field_of(2)), construct_uniform_line(3, field_of(3))));
  CHECK(canonical_form(mk4).digest().size() == 16);
}

TEST_CASE("canonical form agrees with permutation search on small matroids") {
  const auto corpus = oracle::small_corpus(8);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const Matroid& a = corpus[i];
      const Matroid& b = corpus[j];
      if (a.size() != b.size() || a.rank() != b.rank()) continue;
      INFO("pair " << i << "," << j);
      CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
  }
}

TEST_CASE("canonical labeling is a permutation onto the certificate order") {
  const Matroid mk4 = construct_mk4();
  const auto lab = canonical_labeling(mk4, FlatLattice(mk4));
  std::vector<int> sorted = lab;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 6; ++i) CHECK(sorted[i] == i);
}

TEST_CASE("projective geometry recognition") {
  CHECK(is_projective_geometry(construct_pg(3, field_of(2))) == 3);
  CHECK_FALSE(is_projective_geometry(construct_mk4()));
  CHECK(is_projective_geometry(Matroid::empty(field_of(2))) == 0);
  CHECK(is_projective_geometry(construct_uniform_line(4, field_of(3))) == 2);
}

TEST_CASE("forbidden-matroid detection") {
  CHECK(detect_forbidden(construct_mk4(), 2) == "M(K4)");
  CHECK(detect_forbidden(construct_uniform_line(3, field_of(3)), 3) == "U(2,3)");
  CHECK_FALSE(detect_forbidden(construct_pg(3, field_of(2)), 2));
  CHECK(detect_forbidden(construct_pg_minus_flat(3, 1, field_of(2)), 2) == "U(3,4)");
  CHECK(detect_forbidden(construct_hyperoval(field_of(4)), 4) == "U(3,6)");
  CHECK(detect_forbidden(construct_uniform_line(4, field_of(4)), 4) == "U(2,4)");
  CHECK_FALSE(detect_forbidden(construct_uniform_line(5, field_of(4)), 4));
}

TEST_CASE("uniformity") {
  CHECK(is_uniform(construct_hyperoval(field_of(4))));
  CHECK_FALSE(is_uniform(construct_mk4()));
}

TEST_CASE("canonical form refuses oversized matroids") {
  try {
    canonical_form(construct_pg(3, field_of(5)));
    FAIL("expected too-large");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
}
