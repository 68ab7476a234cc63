#include <sstream>

#include "doctest.h"
#include "gwvir/coh_model.hpp"

using namespace gwvir;

static const char* kBuiltins[] = {"point", "P1", "P2", "P3", "P4",
                                  "genus2", "P1xP1", "P1xP2"};

TEST_CASE("builtin models satisfy the structural invariants") {
  for (auto name : kBuiltins) {
    CohModel m = CohModel::builtin(name);
    INFO("model ", name);
    CHECK(m.validate().empty());
  }
}

TEST_CASE("parse and emit round trip") {
  for (auto name : kBuiltins) {
    CohModel m = CohModel::builtin(name);
    std::istringstream is(m.emit());
    CohModel back = CohModel::parse(is);
    CHECK(back.emit() == m.emit());
    CHECK(back.validate().empty());
  }
}

TEST_CASE("chern integral identity for the grading supertrace") {
  std::map<std::string, Rational> expect = {
      {"point", Rational(0)}, {"P1", Rational(1, 2)}, {"P2", Rational(2)},
      {"P3", Rational(5)},    {"P4", Rational(10)}};
  for (auto& [name, v] : expect) {
    CohModel m = CohModel::builtin(name);
    auto r = m.libgober_check();
    INFO("model ", name);
    CHECK(r.pass);
    CHECK(r.lhs == v);
    CHECK(r.rhs == v);
  }
  for (auto name : {"genus2", "P1xP1", "P1xP2"}) {
    auto r = CohModel::builtin(name).libgober_check();
    INFO("model ", name);
    CHECK(r.pass);
  }
}

TEST_CASE("grading matrix and central constants") {
  CohModel pt = CohModel::point();
  CHECK(pt.rho() == Rational(1, 16));
  CHECK(pt.mu(0).at(0, 0) == 0);

  CohModel p2 = CohModel::builtin("P2");
  RatMatrix mu = p2.mu(0);
  CHECK(mu.at(0, 0) == -1);
  CHECK(mu.at(1, 1) == 0);
  CHECK(mu.at(2, 2) == 1);
  // rho = (1/48) int((3 - r) c_r - 2 c_1 c_{r-1}); P2 has c_2 = 3, c_1^2 = 9
  CHECK(p2.rho() == Rational(1 * 3 - 2 * 9, 48));

  CohModel g2 = CohModel::builtin("genus2");
  CHECK(!g2.is_even());
  CHECK(g2.rho_tilde() != 0);
  // (3 - r) chi - 2 c_1^2 with r = 2, chi = 4, c_1^2 = 8
  CHECK(CohModel::builtin("P1xP1").rho() == Rational(1 * 4 - 2 * 8, 48));
}

TEST_CASE("supertrace signs") {
  CohModel g2 = CohModel::builtin("genus2");
  // str(I) = even count - odd count = (2 + 0) - 4... basis is 1, 4 odd, point
  RatMatrix id = RatMatrix::identity(g2.dim());
  CHECK(g2.str(id) == Rational(2 - 4));
  CohModel p1 = CohModel::builtin("P1");
  CHECK(p1.str(RatMatrix::identity(2)) == 2);
}

TEST_CASE("pairing inverse and first chern action") {
  for (auto name : kBuiltins) {
    CohModel m = CohModel::builtin(name);
    CHECK(m.eta_inv() * m.eta == RatMatrix::identity(m.dim()));
  }
  CohModel p1 = CohModel::builtin("P1");
  // c_1 = 2H on the line
  CHECK(p1.R.at(0, 1) == 2);
  CHECK(p1.R.at(1, 1) == 0);
  CHECK(p1.chern_cr == 2);
  CHECK(p1.chern_c1crm1 == 2);
}

TEST_CASE("virtual dimension") {
  CohModel p2 = CohModel::builtin("P2");
  // dim = (3 - r)(g - 1) + c_1(beta) + n
  CHECK(p2.vdim(0, 3, 2) == 1 * (-1) + 3 + 2);
  CohModel pt = CohModel::point();
  CHECK(pt.vdim(2, 0, 1) == 3 * 1 + 0 + 1);
}

TEST_CASE("unknown builtin is rejected") {
  CHECK_THROWS((void)CohModel::builtin("P9"));
}
