#include <doctest.h>

#include "gfchordal/error.hpp"
#include "gfchordal/field.hpp"
#include "gfchordal/linalg.hpp"
#include "oracles.hpp"

using namespace gfc;

namespace {
const int kOrders[] = {2, 3, 4, 5, 7, 8, 9};
}

TEST_CASE("small field arithmetic") {
  const Field f2 = make_field(2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.mul(1, 1) == 1);
  CHECK(make_field(3).inv(2) == 2);
  // x * x = x + 1 modulo x^2 + x + 1
  CHECK(make_field(4).mul(2, 2) == 3);
}

TEST_CASE("multiplication tables match polynomial arithmetic") {
  for (int q : kOrders) {
    const Field& f = field_of(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        INFO("q=" << q << " a=" << a << " b=" << b);
        CHECK(f.mul(a, b) == oracle::poly_mul(q, a, b));
      }
  }
}

TEST_CASE("field axioms hold exhaustively") {
  for (int q : kOrders) {
    const Field& f = field_of(q);
    CHECK(f.order() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("frobenius is a field automorphism of order d") {
  for (int q : {4, 8, 9}) {
    const Field& f = field_of(q);
    bool nontrivial = false;
    for (int a = 0; a < q; ++a) {
      CHECK(f.frobenius(a, f.degree()) == a);
      nontrivial = nontrivial || f.frobenius(a) != a;
      for (int b = 0; b < q; ++b) {
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      }
    }
    CHECK(nontrivial);
  }
}

TEST_CASE("make_field is deterministic and rejects unsupported orders") {
  for (int q : kOrders) CHECK(make_field(q) == make_field(q));
  for (int q : {0, 1, 6, 10, 16, 27}) {
    CHECK_FALSE(is_supported_order(q));
    try {
      make_field(q);
      FAIL("expected unsupported-order");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unsupported_order);
    }
  }
}

TEST_CASE("normalization makes the first nonzero coordinate one") {
  const Field& f = field_of(5);
  Coords v{0, 3, 4};
  CHECK(normalize(v, f));
  CHECK(v == Coords{0, 1, 3});
  CHECK(is_normalized(v));
  Coords zero{0, 0};
  CHECK_FALSE(normalize(zero, f));
}
