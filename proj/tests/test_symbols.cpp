#include "doctest.h"
#include "gwvir/psi_symbol.hpp"

using namespace gwvir;

TEST_CASE("matrix polynomial basics") {
  RatMatrix a(1, 1), b(1, 1);
  a.at(0, 0) = 2;
  b.at(0, 0) = 3;
  MatPoly p = MatPoly::variable(1) + MatPoly::constant(a);  // D + 2
  MatPoly q = MatPoly::variable(1) - MatPoly::constant(b);  // D - 3
  MatPoly pq = p * q;
  CHECK(pq.degree() == 2);
  CHECK(pq.eval(Rational(1)).at(0, 0) == (1 + 2) * (1 - 3));
  CHECK(p.shifted(Rational(5)).eval(Rational(0)) == p.eval(Rational(5)));
  CHECK(p.negated_argument().eval(Rational(4)) == p.eval(Rational(-4)));
  CHECK((p - p).is_zero());
}

TEST_CASE("normal form composition") {
  // del^k o f(D) = f(D + k) del^k
  RatMatrix c(1, 1);
  c.at(0, 0) = 1;
  MatPoly f = MatPoly::variable(1) * MatPoly::variable(1) + MatPoly::constant(c);
  PsiSymbol left = psi_mul(PsiSymbol::del(1, 2), PsiSymbol::term(f, 0));
  PsiSymbol expect = PsiSymbol::term(f.shifted(Rational(2)), 2);
  CHECK(left == expect);
  // associativity on a sample
  PsiSymbol x = PsiSymbol::term(f, 1) + PsiSymbol::del(1, -2);
  PsiSymbol y = PsiSymbol::term(f.shifted(Rational(1)), -1);
  PsiSymbol z = PsiSymbol::del(1, 3) + PsiSymbol::term(f, 0);
  CHECK(psi_mul(psi_mul(x, y), z) == psi_mul(x, psi_mul(y, z)));
}

TEST_CASE("commutation relations of the constraint symbols") {
  for (std::string name : {"point", "P1", "P2", "genus2"}) {
    CohModel m = CohModel::builtin(name);
    for (int k = -1; k <= 4; ++k)
      for (int l = -1; l <= 4; ++l) {
        PsiSymbol lhs = psi_commutator(symbol_Lk(m, k), symbol_Lk(m, l));
        PsiSymbol rhs = k + l < -1 ? PsiSymbol(m.dim())
                                   : Rational(k - l) * symbol_Lk(m, k + l);
        INFO("model ", name, " k=", k, " l=", l);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("central cocycle values") {
  for (std::string name : {"point", "P1", "P2", "P3", "genus2", "P1xP1"}) {
    CohModel m = CohModel::builtin(name);
    INFO("model ", name);
    for (int k = -1; k <= 3; ++k)
      for (int l = -1; l <= 3; ++l) {
        Rational c = cocycle(m, symbol_Lk(m, k), symbol_Lk(m, l));
        Rational expect = (k + l == 0) ? Rational(2 * k) * m.rho() : Rational(0);
        CHECK(c == expect);
      }
    // closed form via the supertrace of the squared grading
    RatMatrix mu = m.mu(0);
    RatMatrix sq = mu * mu;
    for (long a = 0; a < m.dim(); ++a) sq.at(a, a) -= Rational(1, 4);
    CHECK(cocycle(m, symbol_Lk(m, 1), symbol_Lk(m, -1)) ==
          Rational(-1, 2) * m.str(sq));
  }
}

TEST_CASE("graded variants of the cocycle") {
  CohModel m = CohModel::builtin("genus2");
  for (Rational s : {Rational(0), Rational(1, 2), Rational(1), Rational(1, 3)}) {
    Rational c = cocycle(m, symbol_Lk(m, 1, s), symbol_Lk(m, -1, s));
    CHECK(c == 2 * m.rho() - s * (s - 1) / 2 * m.rho_tilde());
  }
}

TEST_CASE("parity normal form on even models") {
  for (std::string name : {"point", "P1", "P2", "P1xP1"}) {
    CohModel m = CohModel::builtin(name);
    for (int k = -1; k <= 4; ++k) {
      INFO("model ", name, " k=", k);
      CHECK(parity_normal_form_check(m, symbol_Lk(m, k)));
    }
  }
}
