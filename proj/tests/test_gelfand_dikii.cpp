#include "doctest.h"
#include "gwvir/gelfand_dikii.hpp"

using namespace gwvir;

namespace {
DiffPoly up(int i) { return DiffPoly::jet(i); }
}

TEST_CASE("closed forms of R_1, R_2, R_3") {
  GelfandDikii gd;
  CHECK(gd.R(0) == DiffPoly::constant(Rational(1)));
  CHECK(gd.R(1) == up(0));
  DiffPoly r2 = Rational(1, 2) * (up(0) * up(0)) +
                Rational(1, 12) * (DiffPoly::hbar(1) * up(2));
  CHECK(gd.R(2) == r2);
  DiffPoly r3 = Rational(1, 6) * (up(0) * up(0) * up(0)) +
                DiffPoly::hbar(1) * (Rational(1, 12) * (up(0) * up(2)) +
                                     Rational(1, 24) * (up(1) * up(1))) +
                Rational(1, 240) * (DiffPoly::hbar(2) * up(4));
  CHECK(gd.R(3) == r3);
}

TEST_CASE("defining recursion holds after the fact") {
  GelfandDikii gd;
  for (int m = 0; m <= 8; ++m)
    CHECK(apply_K(gd.R(m)) ==
          Rational(2 * m + 1, 2) * gd.R(m + 1).derive());
}

TEST_CASE("jet order bound") {
  GelfandDikii gd;
  for (int m = 1; m <= 8; ++m)
    CHECK(gd.R(m).max_jet() <= 2 * m - 2);
}

TEST_CASE("kdv right hand sides") {
  GelfandDikii gd;
  for (int m = 0; m <= 5; ++m)
    CHECK(gd.kdv_rhs(m) == gd.R(m + 1).derive());
  // t_1 flow is the KdV equation u u' + hbar u'''/12
  DiffPoly kdv = up(0) * up(1) + Rational(1, 12) * (DiffPoly::hbar(1) * up(3));
  CHECK(gd.kdv_rhs(1) == kdv);
}

TEST_CASE("scaling weight of R_m") {
  // under u^(j) of weight 2 + j and hbar of weight 0, R_m is homogeneous of
  // weight 2m
  GelfandDikii gd;
  for (int m = 1; m <= 6; ++m)
    for (auto& [mon, c] : gd.R(m).terms()) {
      long w = 0;
      for (int j : mon.jets) w += 2 + j;
      CHECK(w == 2L * m);
      CHECK(c != 0);
    }
}
