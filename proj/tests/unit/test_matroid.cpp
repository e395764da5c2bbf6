#include <doctest.h>

#include <random>

#include "gfchordal/error.hpp"
#include "gfchordal/geometry.hpp"
#include "gfchordal/iso.hpp"
#include "gfchordal/matroid.hpp"
#include "oracles.hpp"

using namespace gfc;

namespace {

const Matroid& f7() {
  static const Matroid m = construct_pg(3, field_of(2));
  return m;
}
const Matroid& mk4() {
  static const Matroid m = construct_mk4();
  return m;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(f7().rank(f7().ground()) == 3);
  CHECK(mk4().rank(mk4().elements({"12", "13", "23"})) == 2);
  CHECK(mk4().rank(ElementSet{}) == 0);
}

TEST_CASE("closure") {
  const ElementSet two = ElementSet::single(0).with(1);
  const ElementSet line = f7().closure(two);
  CHECK(line.count() == 3);
  CHECK(f7().rank(line) == 2);
  CHECK(mk4().closure(ElementSet{}).empty());
  const ElementSet s = mk4().elements({"12", "34"});
  CHECK(mk4().closure(s) == s);
}

TEST_CASE("flats by rank") {
  CHECK(flats(f7(), 2).size() == 7);
  CHECK(flats(mk4(), 2).size() == 7);
  const Matroid u34 = construct_pg_minus_flat(3, 1, field_of(2));
  const auto lines = flats(u34, 2);
  CHECK(lines.size() == 6);
  for (ElementSet l : lines) CHECK(l.count() == 2);
  try {
    flats(f7(), 4);
    FAIL("expected rank-out-of-range");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::rank_out_of_range);
  }
}

TEST_CASE("flats agree with the subset-scan oracle") {
  for (const Matroid& m : oracle::small_corpus(9)) {
    std::set<std::uint64_t> lib;
    const FlatLattice lat(m);
    for (int k = 0; k <= m.rank(); ++k) {
      for (ElementSet f : flats(m, k)) lib.insert(f.bits());
      for (ElementSet f : lat.flats(k)) CHECK(lat.rank_of_flat(f) == k);
    }
    CHECK(lib == oracle::all_flats(m));
  }
}

TEST_CASE("circuits") {
  const auto u23 = circuits(construct_uniform_line(3, field_of(2)));
  REQUIRE(u23.size() == 1);
  CHECK(u23[0].count() == 3);
  const auto k4 = circuits(mk4());
  CHECK(k4.size() == 7);
  CHECK(std::count_if(k4.begin(), k4.end(), [](ElementSet c) { return c.count() == 3; }) == 4);
  CHECK(std::count_if(k4.begin(), k4.end(), [](ElementSet c) { return c.count() == 4; }) == 3);
  const auto u34 = circuits(construct_pg_minus_flat(3, 1, field_of(2)));
  REQUIRE(u34.size() == 1);
  CHECK(u34[0].count() == 4);

  for (const Matroid& m : oracle::small_corpus(9)) {
    std::set<std::uint64_t> lib;
    for (ElementSet c : circuits(m)) lib.insert(c.bits());
    CHECK(lib == oracle::circuits(m));
  }
}

TEST_CASE("cocircuits") {
  const Matroid u22 = construct_uniform_line(2, field_of(2));
  const auto c = cocircuits(u22);
  REQUIRE(c.size() == 2);
  CHECK(c[0].count() == 1);
  CHECK(c[1].count() == 1);
  const auto f7c = cocircuits(f7());
  CHECK(f7c.size() == 7);
  for (ElementSet d : f7c) CHECK(d.count() == 4);
  const auto k4c = cocircuits(mk4());
  CHECK(k4c.size() == 7);
  for (ElementSet d : k4c) CHECK(mk4().rank(mk4().ground() - d) == 2);
}

TEST_CASE("circuits and cocircuits are orthogonal antichains") {
  for (const Matroid& m : oracle::small_corpus(10)) {
    const auto cs = circuits(m);
    const auto ds = cocircuits(m);
    for (ElementSet c : cs) {
      for (ElementSet d : ds) CHECK((c & d).count() != 1);
      for (ElementSet c2 : cs) CHECK((c == c2 || !c.subset_of(c2)));
    }
    for (ElementSet d : ds)
      for (ElementSet d2 : ds) CHECK((d == d2 || !d.subset_of(d2)));
  }
}

TEST_CASE("restriction to flats") {
  const ElementSet line = flats(f7(), 2).front();
  const Matroid l = restrict_to_flat(f7(), line);
  CHECK(is_projective_geometry(l) == 2);
  const Matroid tri = restrict_to_flat(mk4(), mk4().elements({"12", "13", "23"}));
  CHECK(tri.size() == 3);
  CHECK(tri.rank() == 2);
  CHECK(tri.labels() == std::vector<std::string>{"12", "13", "23"});
  CHECK(is_isomorphic(restrict_to_flat(mk4(), mk4().ground()), mk4()));
  try {
    restrict_to_flat(f7(), ElementSet::single(0).with(1));
    FAIL("expected not-a-flat");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_flat);
  }
}

TEST_CASE("contraction with simplification") {
  const Matroid u23 = construct_uniform_line(3, field_of(2));
  for (int e = 0; e < 7; ++e) CHECK(oracle::isomorphic(contract_simplify(f7(), ElementSet::single(e)), u23));
  for (int e = 0; e < 6; ++e) CHECK(oracle::isomorphic(contract_simplify(mk4(), ElementSet::single(e)), u23));
  const Matroid same = contract_simplify(mk4(), ElementSet{});
  CHECK(same.labels() == mk4().labels());
  CHECK(is_isomorphic(same, mk4()));
  // representatives keep the smallest surviving label index
  const Matroid c = contract_simplify(mk4(), mk4().elements({"12"}));
  auto kept = c.labels();
  std::sort(kept.begin(), kept.end());
  CHECK(kept == std::vector<std::string>{"13", "14", "34"});
}

TEST_CASE("deletion") {
  CHECK(oracle::isomorphic(delete_elements(f7(), ElementSet::single(3)), mk4()));
  CHECK(delete_elements(mk4(), ElementSet{}).labels() == mk4().labels());
  const ElementSet line = flats(f7(), 2).front();
  const Matroid four = delete_elements(f7(), line);
  CHECK(four.size() == 4);
  CHECK(circuits(four).size() == 1);
}

TEST_CASE("rank axioms and closure operator on random subsets") {
  std::mt19937_64 rng(7);
  for (const Matroid& m : oracle::small_corpus(15)) {
    if (m.size() == 0) continue;
    const std::uint64_t full = m.ground().bits();
    for (int t = 0; t < 20; ++t) {
      const ElementSet a(rng() & full);
      const ElementSet b(rng() & full);
      CHECK(m.rank(a) >= 0);
      CHECK(m.rank(a) <= a.count());
      CHECK(m.rank(a) <= m.rank(a | b));
      CHECK(m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b));
      const ElementSet ca = m.closure(a);
      CHECK(a.subset_of(ca));
      CHECK(m.closure(ca) == ca);
      CHECK(ca.subset_of(m.closure(a | b)));
      CHECK(m.rank(ca) == m.rank(a));
    }
  }
}

TEST_CASE("contraction commutes with restriction to a flat") {
  for (const Matroid& m : oracle::small_corpus(8)) {
    const FlatLattice lat(m);
    for (int k = 1; k <= m.rank(); ++k) {
      for (ElementSet f : lat.flats(k)) {
        const int e = f.lowest();
        // si((M|F)/e)
        const Matroid left = contract_simplify(m.restrict_to(f), ElementSet::single(0));
        // si(M/e) restricted to the closure of F - e there
        const Matroid ce = contract_simplify(m, ElementSet::single(e));
        ElementSet image;
        for (int i = 0; i < ce.size(); ++i) {
          if (f.contains(m.index_of(ce.label(i)))) image = image.with(i);
        }
        const Matroid right = ce.restrict_to(ce.closure(image));
        CHECK(oracle::isomorphic(left, right));
      }
    }
  }
}

TEST_CASE("contracting a set equals contracting a basis of its closure") {
  std::mt19937_64 rng(11);
  for (const Matroid& m : oracle::small_corpus(8)) {
    if (m.size() == 0) continue;
    const ElementSet s(rng() & m.ground().bits());
    const ElementSet cl = m.closure(s);
    ElementSet basis;
    for (int e : cl) {
      if (m.rank(basis.with(e)) > m.rank(basis)) basis = basis.with(e);
    }
    CHECK(oracle::isomorphic(contract_simplify(m, s), contract_simplify(m, basis)));
  }
}

TEST_CASE("matroid construction validates points and labels") {
  const Field& f = field_of(3);
  auto code = [&](std::vector<Coords> pts, std::vector<std::string> labels = {}) {
    try {
      Matroid(f, 2, std::move(pts), std::move(labels));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::precondition_violation;
  };
  CHECK(code({{1, 0}, {1, 0}}) == Errc::invalid_argument);
  CHECK(code({{0, 0}}) == Errc::invalid_argument);
  CHECK(code({{2, 0}}) == Errc::invalid_argument);
  CHECK(code({{1, 0}, {0, 1}}, {"a", "a"}) == Errc::invalid_argument);
  const Matroid m(f, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(m.rank() == 2);
  CHECK(m.labels() == std::vector<std::string>{"e0", "e1", "e2"});
  try {
    m.index_of("zz");
    FAIL("expected unknown-label");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_label);
  }
}
