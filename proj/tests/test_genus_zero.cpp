#include "doctest.h"
#include "gwvir/genus_zero.hpp"

using namespace gwvir;

namespace {
struct PointFixture {
  TauStore store;
  GWTable table;
  CohModel pt;
  PointFixture() : table(export_point_table(store, 0, 20)), pt(CohModel::point()) {}
};
}

TEST_CASE("fundamental solution inverts against its adjoint") {
  PointFixture f;
  G0Env env(f.table, f.pt, 5, 5);
  auto r = invert_check(env);
  INFO(r.detail);
  CHECK(r.pass);
  CHECK(env.indeterminate() == 0);
}

TEST_CASE("vanishing window of the auxiliary series") {
  PointFixture f;
  G0Env env(f.table, f.pt, 5, 5);
  auto r = g_vanish_check(env, -4);
  INFO(r.detail);
  CHECK(r.pass);
  CHECK(r.checked >= 5);
  CHECK(env.indeterminate() == 0);
}

TEST_CASE("remaining identities on the point locus") {
  PointFixture f;
  G0Env env(f.table, f.pt, 5, 5);
  for (auto& [name, rep] :
       std::vector<std::pair<const char*, G0Report>>{
           {"bilinear", bilinear_check(env, 2)},
           {"fp", fp_check(env, 2)},
           {"string", string_theta_check(env)},
           {"trr", trr_check(env, 2)},
           {"wdvv", wdvv_check(env, 1)},
           {"amat", amat_check(env, 6)},
           {"uv", uv_delta_check(env)},
           {"iterate", iterate_check(env, 3)},
           {"nabla", nabla_z_check(env, 3)}}) {
    INFO(name, ": ", rep.detail);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
  }
  CHECK(env.indeterminate() == 0);
}

TEST_CASE("series coefficients carry the three point values") {
  PointFixture f;
  G0Env env(f.table, f.pt, 5, 5);
  LaurentJetSeries th = env.big_theta();
  JetMat m = th.get(-1, env.zero());
  // the zeta^-1 block vanishes at t = 0 but its first variable derivative is
  // the triple intersection
  CHECK(m.at(0, 0).coeff(JetMon{}, 0) == 0);
  CHECK(m.at(0, 0).coeff(JetMon{{0}}, 0) == 1);
  // leading block is the identity
  JetMat lead = th.get(0, env.zero());
  CHECK(lead.at(0, 0).coeff(JetMon{}, 0) == 1);
}

TEST_CASE("checks reject a corrupted table") {
  PointFixture f;
  GWTable bad = f.table;
  bad.set(nullptr, 0, {}, {{1, 0}, {0, 0}, {0, 0}, {0, 0}}, Rational(2));
  G0Env env(bad, f.pt, 4, 4);
  CHECK(!invert_check(env).pass);
  CHECK(!trr_check(env, 1).pass);
}

TEST_CASE("line sample: constant term of V is first chern multiplication") {
  CohModel p1 = CohModel::builtin("P1");
  GWTable t = sample_p1_table();
  G0Env env(t, p1, 0, 1);
  JetMat v = env.v_matrix();
  RatMatrix rop = p1.R.transpose();
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 2; ++b)
      CHECK(v.at(a, b).coeff(JetMon{}, 0) == rop.at(a, b));
  CHECK(env.indeterminate() == 0);
}

TEST_CASE("series products track the trusted window") {
  PointFixture f;
  G0Env env(f.table, f.pt, 4, 4);
  LaurentJetSeries g = env.g_series();
  // trusted down to zeta^-4 regardless of the raw truncation depth
  CHECK(g.lo <= -4);
  LaurentJetSeries a = env.adjoint_neg(env.theta());
  LaurentJetSeries b = env.big_theta();
  LaurentJetSeries p = series_mul(a, b);
  CHECK(p.lo == std::max(a.lo + b.hi(), b.lo + a.hi()));
}
