#include "doctest.h"
#include "gwvir/diffalg.hpp"

using namespace gwvir;

namespace {
DiffPoly u() { return DiffPoly::jet(0); }
DiffPoly up(int i) { return DiffPoly::jet(i); }
}

TEST_CASE("ring operations") {
  DiffPoly p = u() * u();
  CHECK(p.coeff(DiffMon{0, {0, 0}}) == 1);
  CHECK((p - p).is_zero());
  DiffPoly q = DiffPoly::hbar(1) * up(2);
  CHECK(q.coeff(DiffMon{1, {2}}) == 1);
  CHECK((Rational(3) * q).coeff(DiffMon{1, {2}}) == 3);
  CHECK(p.max_jet() == 0);
  CHECK(q.max_jet() == 2);
  CHECK(DiffPoly::constant(Rational(2)).max_jet() == -1);
}

TEST_CASE("derivation") {
  // d(u^2) = 2 u u'
  DiffPoly d = (u() * u()).derive();
  CHECK(d == Rational(2) * (u() * up(1)));
  // Leibniz on a product
  DiffPoly a = u() * up(1);
  DiffPoly b = up(2);
  CHECK((a * b).derive() == a.derive() * b + a * b.derive());
  CHECK(u().derive(3) == up(3));
}

TEST_CASE("partial derivatives") {
  DiffPoly p = u() * u() * up(1);
  CHECK(p.partial(0) == Rational(2) * (u() * up(1)));
  CHECK(p.partial(1) == u() * u());
  CHECK(p.partial(2).is_zero());
}

TEST_CASE("integration") {
  // u u' = d(u^2/2)
  auto q = (u() * up(1)).integrate();
  REQUIRE(q.has_value());
  CHECK(q->derive() == u() * up(1));
  // (u')^2 is not a total derivative
  CHECK(!(up(1) * up(1)).integrate().has_value());
  // anything of the form d(something) integrates back
  DiffPoly s = (u() * u() * up(2) + DiffPoly::hbar(1) * up(1)).derive();
  auto r = s.integrate();
  REQUIRE(r.has_value());
  CHECK(r->derive() == s);
}

TEST_CASE("variational derivative") {
  // vanishes exactly on total derivatives
  DiffPoly p = (u() * u() * up(1) + up(1) * up(2)).derive();
  CHECK(p.variational_derivative().is_zero());
  // delta/delta u of u^3/3 is u^2
  DiffPoly c = Rational(1, 3) * (u() * u() * u());
  CHECK(c.variational_derivative() == u() * u());
  // delta/delta u of (u')^2/2 is -u''
  DiffPoly k = Rational(1, 2) * (up(1) * up(1));
  CHECK(k.variational_derivative() == Rational(-1) * up(2));
}

TEST_CASE("display is deterministic and nonempty") {
  DiffPoly p = u() * u() + DiffPoly::hbar(1) * up(2);
  CHECK(!p.str().empty());
  CHECK(p.str() == p.str());
  CHECK(DiffPoly().str() == "0");
}
