#include "doctest.h"
#include "gwvir/quad_operator.hpp"

using namespace gwvir;

static const int kM = 12;

TEST_CASE("direct build agrees with the section of the symbol") {
  for (std::string name : {"point", "P1", "P2"}) {
    CohModel m = CohModel::builtin(name);
    for (int k = -1; k <= 4; ++k) {
      QuadOperator d = build_Lk_direct(m, k, kM);
      QuadOperator expect = sigma_inverse(m, symbol_Lk(m, k), kM);
      // the direct build carries the central constant at k = 0
      if (k == 0) expect.add_scalar(0, m.rho());
      std::string w;
      INFO("model ", name, " k=", k, " ", w);
      CHECK(trusted_equal(d, expect, &w));
    }
  }
}

TEST_CASE("free field identity certifies the symbol") {
  for (std::string name : {"point", "P1", "P2"}) {
    CohModel m = CohModel::builtin(name);
    for (int k = -1; k <= 3; ++k) {
      PsiSymbol s = symbol_Lk(m, k);
      auto rep = free_field_symbol_check(m, build_Lk_direct(m, k, kM), s, kM);
      INFO("model ", name, " k=", k, " ", rep.detail);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("free field identity rejects a wrong symbol") {
  CohModel m = CohModel::point();
  auto rep = free_field_symbol_check(m, build_Lk_direct(m, -1, kM),
                                     Rational(-1) * symbol_Lk(m, -1), kM);
  CHECK(!rep.pass);
}

TEST_CASE("operator commutators close, including the scalar part") {
  for (std::string name : {"point", "P2", "P1xP1"}) {
    CohModel m = CohModel::builtin(name);
    for (int k = -1; k <= 3; ++k)
      for (int l = -1; l <= 3; ++l) {
        QuadOperator c = quad_commutator(build_Lk_direct(m, k, kM),
                                         build_Lk_direct(m, l, kM));
        QuadOperator expect = (k + l >= -1)
            ? Rational(k - l) * build_Lk_direct(m, k + l, kM)
            : QuadOperator(m.dim(), kM, 0);
        std::string w;
        INFO("model ", name, " k=", k, " l=", l, " ", w);
        CHECK(trusted_equal(c, expect, &w));
      }
  }
}

TEST_CASE("central terms") {
  for (std::string name : {"point", "P1", "P2"}) {
    auto ct = central_term_check(CohModel::builtin(name), 4);
    INFO("model ", name, " ", ct.detail);
    CHECK(ct.pass);
  }
}

TEST_CASE("graded modification of the first relation") {
  for (std::string name : {"P2", "genus2"}) {
    CohModel m = CohModel::builtin(name);
    for (Rational s : {Rational(0), Rational(1), Rational(2), Rational(1, 2)}) {
      auto rep = modified_virasoro_check(m, s, kM);
      INFO("model ", name, " s=", rat_str(s), " ", rep.detail);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("commutators shrink the trusted window") {
  CohModel m = CohModel::point();
  QuadOperator a = build_Lk_direct(m, 2, kM);
  QuadOperator b = build_Lk_direct(m, 3, kM);
  QuadOperator c = quad_commutator(a, b);
  CHECK(c.trust() <= std::min(a.trust(), b.trust()));
  CHECK(c.trust() > 0);
}
