#include <doctest.h>

#include <random>

#include "gfchordal/chordal.hpp"
#include "gfchordal/error.hpp"
#include "gfchordal/geometry.hpp"
#include "gfchordal/gpc.hpp"
#include "oracles.hpp"

using namespace gfc;

namespace {

Matroid k4_glued() {
  const Matroid k4 = construct_mk4();
  return gpc(GpcSpec{k4, k4, {{"12", "12"}, {"13", "13"}, {"23", "23"}}});
}

Matroid f7_glued() {
  const Matroid f7 = construct_pg(3, field_of(2));
  GpcSpec spec{f7, f7, {}};
  for (const auto& l : f7.labels_of(flats(f7, 2).front())) spec.glue.emplace_back(l, l);
  return gpc(spec);
}

const Matroid& u34() {
  static const Matroid m = construct_pg_minus_flat(3, 1, field_of(2));
  return m;
}

}  // namespace

TEST_CASE("induced minors of small examples") {
  const Matroid f7 = construct_pg(3, field_of(2));
  const auto fm = induced_minors(f7, 7);
  CHECK(fm.count(canonical_form(construct_uniform_line(3, field_of(2)))) == 1);
  CHECK(fm.count(canonical_form(f7)) == 1);
  CHECK(fm.count(canonical_form(construct_mk4())) == 0);

  const Matroid ag = construct_pg_minus_flat(4, 1, field_of(2));
  CHECK(induced_minors(ag, 4).count(canonical_form(u34())) == 1);

  for (const Matroid& m : oracle::small_corpus(9)) {
    const auto all = induced_minors(m, m.size());
    CHECK(all.count(canonical_form(m)) == 1);
    CHECK(all.count(canonical_form(Matroid::empty(m.field()))) == 1);
  }
}

TEST_CASE("induced-minor normal form matches the BFS closure") {
  for (const Matroid& m : oracle::small_corpus(9)) {
    CHECK(induced_minors(m, m.size()) == induced_minors_normal_form(m, m.size()));
  }
}

TEST_CASE("forbidden induced minors") {
  const Matroid k4 = construct_mk4();
  const auto w = find_forbidden_induced_minor(k4);
  REQUIRE(w);
  CHECK(w->target == "M(K4)");
  CHECK(w->contract_flat.empty());
  CHECK(w->restrict_flat.size() == 6);
  CHECK_FALSE(find_forbidden_induced_minor(f7_glued()));
  const auto w2 = find_forbidden_induced_minor(u34());
  REQUIRE(w2);
  CHECK(w2->target == "U(3,4)");
}

TEST_CASE("witnesses reproduce their target") {
  for (const Matroid& m : oracle::small_corpus(15)) {
    const auto w = find_forbidden_induced_minor(m);
    if (!w) continue;
    const ElementSet c = m.elements(w->contract_flat);
    CHECK(m.is_flat(c));
    const Matroid con = contract_simplify(m, c);
    const ElementSet g = con.elements(w->restrict_flat);
    CHECK(con.is_flat(g));
    CHECK(detect_forbidden(con.restrict_to(g), m.q()) == w->target);
  }
}

TEST_CASE("GF(q)-chordality of the named examples") {
  const auto f7 = is_gfq_chordal(construct_pg(3, field_of(2)));
  CHECK(f7.member);
  REQUIRE(f7.construction);
  CHECK(f7.construction->kind == ConstructionCertificate::Kind::pg_leaf);
  CHECK(f7.construction->pg_rank == 3);

  const auto glued = is_gfq_chordal(k4_glued());
  CHECK_FALSE(glued.member);
  REQUIRE(glued.witness);
  CHECK(glued.witness->target == "M(K4)");

  const auto u23_3 = is_gfq_chordal(construct_uniform_line(3, field_of(3)));
  CHECK_FALSE(u23_3.member);
  REQUIRE(u23_3.witness);
  CHECK(u23_3.witness->target == "U(2,3)");
  const auto u23_2 = is_gfq_chordal(construct_uniform_line(3, field_of(2)));
  CHECK(u23_2.member);
  CHECK(u23_2.construction->pg_rank == 2);

  const auto ff = is_gfq_chordal(f7_glued());
  CHECK(ff.member);
  REQUIRE(ff.construction);
  CHECK(ff.construction->kind == ConstructionCertificate::Kind::join);
  CHECK(ff.construction->glue_rank == 2);
  CHECK(ff.construction->leaf_count() == 2);

  CHECK(is_gfq_chordal(Matroid::empty(field_of(2))).member);
  const auto oval = is_gfq_chordal(construct_hyperoval(field_of(4)));
  CHECK_FALSE(oval.member);
  REQUIRE(oval.witness);
  CHECK(oval.witness->target == "U(3,6)");
}

TEST_CASE("direct sums are joined across the empty P_0") {
  const Matroid f7 = construct_pg(3, field_of(2));
  const Matroid sum = gpc(GpcSpec{f7, f7, {}});
  const auto r = is_gfq_chordal(sum);
  CHECK(r.member);
  REQUIRE(r.construction);
  CHECK(r.construction->kind == ConstructionCertificate::Kind::join);
  CHECK(r.construction->glue.empty());
  CHECK(r.construction->glue_rank == 0);
}

TEST_CASE("certificates replay to the input and decisions do not depend on the divider chosen") {
  std::mt19937_64 rng(5);
  for (const Matroid& m : oracle::small_corpus(15)) {
    const auto r = is_gfq_chordal(m);
    if (r.member) CHECK(is_isomorphic(replay(m, *r.construction), m));
    for (int t = 0; t < 3; ++t) {
      const auto d = decompose(m, LeafMode::projective, [&](std::size_t n) { return rng() % n; });
      CHECK(d.ok == r.member);
      if (d.ok) CHECK(is_isomorphic(replay(m, *d.certificate), m));
    }
  }
}

TEST_CASE("rejections carry a witness in the small corpus") {
  for (const Matroid& m : oracle::small_corpus(15)) {
    const auto r = is_gfq_chordal(m);
    CHECK(r.member == !find_forbidden_induced_minor(m).has_value());
    if (!r.member) CHECK(r.witness.has_value());
  }
}

TEST_CASE("detected forbidden matroids are never members") {
  for (const Matroid& m : oracle::small_corpus(15)) {
    if (detect_forbidden(m, m.q())) CHECK_FALSE(is_gfq_chordal(m).member);
  }
}

TEST_CASE("N_q membership") {
  const auto glued = is_nq(k4_glued());
  CHECK(glued.member);
  REQUIRE(glued.construction);
  CHECK(glued.construction->kind == ConstructionCertificate::Kind::join);
  CHECK(glued.construction->glue_rank == 2);
  REQUIRE(glued.construction->children.size() == 2);
  for (const auto& ch : glued.construction->children) {
    CHECK(ch.kind == ConstructionCertificate::Kind::round_leaf);
    CHECK(ch.elements.size() == 6);
  }
  const auto u = is_nq(u34());
  CHECK_FALSE(u.member);
  REQUIRE(u.failing);
  CHECK(u.failing->local_conn == 1);
  CHECK(u.failing->intersection_flat.empty());
  CHECK(is_nq(construct_pg(3, field_of(2))).member);
  CHECK(is_nq(construct_mk4()).member);
}

TEST_CASE("CFK circuit chordality") {
  CHECK(cfk_chordal(construct_mk4()));
  CHECK_FALSE(cfk_chordal(u34()));
  CHECK(cfk_chordal(construct_uniform_line(4, field_of(3))));
  CHECK(cfk_chordal(construct_pg(3, field_of(2))));
}

TEST_CASE("size bounds of the induced-minor machinery") {
  const Matroid big = construct_pg(3, field_of(4));
  for (auto fn : {+[](const Matroid& m) { induced_minors(m, 3); }, +[](const Matroid& m) { cfk_chordal(m); },
                  +[](const Matroid& m) { induced_minors_normal_form(m, 3); }}) {
    try {
      fn(big);
      FAIL("expected too-large");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::too_large);
    }
  }
}
