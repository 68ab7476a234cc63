#include <sstream>

#include "doctest.h"
#include "gwvir/tau.hpp"

using namespace gwvir;

TEST_CASE("pinned correlator values") {
  TauStore s;
  CHECK(s.tau(0, {0, 0, 0}) == 1);
  CHECK(s.tau(1, {1}) == Rational(1, 24));
  CHECK(s.tau(2, {4}) == Rational(1, 1152));
  CHECK(s.tau(2, {2, 3}) == Rational(29, 5760));
  CHECK(s.tau(2, {2, 2, 2}) == Rational(7, 240));
  CHECK(s.tau(3, {7}) == Rational(1, 82944));
}

TEST_CASE("dimension and stability conventions") {
  TauStore s;
  // dimension mismatch gives zero
  CHECK(s.tau(1, {2}) == 0);
  CHECK(s.tau(0, {0, 0, 1}) == 0);
  // key ordering does not matter
  CHECK(s.tau(2, {3, 2}) == s.tau(2, {2, 3}));
}

TEST_CASE("genus zero closed form agrees with the recursion") {
  TauStore s;
  std::vector<std::vector<int>> keys = {
      {0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 2},
      {0, 0, 0, 0, 1, 2}, {0, 0, 0, 0, 0, 3}};
  for (auto& ks : keys) {
    TauKey k = TauKey::make(0, ks);
    REQUIRE(k.dim_ok());
    CHECK(s.tau(k) == TauStore::genus0_closed(k.ks));
  }
}

TEST_CASE("string and dilaton reductions") {
  TauStore s;
  // string: <tau_0 X>_g = sum over i of <...tau_{k_i - 1}...>_g
  TauKey key = TauKey::make(2, {0, 2, 2, 3});
  Rational sum = 0;
  for (auto& [k2, c] : TauStore::string_reduce(key)) sum += c * s.tau(k2);
  CHECK(s.tau(key) == sum);
  // dilaton: <tau_1 X>_g = (2g - 2 + n) <X>_g
  auto d = TauStore::dilaton_reduce(TauKey::make(2, {1, 2, 2, 2}));
  REQUIRE(d.has_value());
  CHECK(d->second * s.tau(d->first) == s.tau(2, {1, 2, 2, 2}));
  CHECK(s.tau(2, {1, 2, 2, 2}) == Rational(5) * s.tau(2, {2, 2, 2}));
  // bases
  CHECK(TauStore::string_reduce(TauKey::make(0, {0, 0, 0})).empty());
  CHECK(!TauStore::dilaton_reduce(TauKey::make(1, {1})).has_value());
}

TEST_CASE("recursion sides expose the constraint intermediates") {
  TauStore s;
  auto [l1, r1] = s.recursion_sides(TauKey::make(2, {4}));
  CHECK(l1 == Rational(945, 16));
  CHECK(r1 == Rational(105, 2048));
  CHECK(l1 * s.tau(2, {4}) == r1);
  auto [l2, r2] = s.recursion_sides(TauKey::make(2, {2, 3}));
  CHECK(r2 == Rational(203, 3072));
  CHECK(l2 * s.tau(2, {2, 3}) == r2);
  auto [l3, r3] = s.recursion_sides(TauKey::make(2, {2, 2, 2}));
  CHECK(r3 == Rational(7, 64));
  CHECK(l3 * s.tau(2, {2, 2, 2}) == r3);
}

TEST_CASE("symmetry factors and per-monomial coefficients") {
  CHECK(multiset_sym_factor({2, 2, 2}) == 6);
  CHECK(multiset_sym_factor({1, 2, 2, 5}) == 2);
  CHECK(multiset_sym_factor({}) == 1);
  TauStore s;
  CHECK(s.tau_over_sym(TauKey::make(2, {2, 2, 2})) == Rational(7, 1440));
}

TEST_CASE("genus potential term lists") {
  TauStore s;
  auto g2 = genus_potential_iz(s, 2);
  CHECK((long)g2.size() == partition_count(3));
  std::map<int, Rational> by_power;
  for (auto& t : g2) {
    CHECK(by_power.emplace(t.uprime_power, t.coeff).second);
    CHECK((int)t.ks.size() + 2 == t.uprime_power);
  }
  REQUIRE(by_power.size() == 3);
  CHECK(by_power[3] == Rational(1, 1152));
  CHECK(by_power[4] == Rational(29, 5760));
  CHECK(by_power[5] == Rational(7, 1440));
  CHECK((long)genus_potential_iz(s, 3).size() == partition_count(6));
}

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(3) == 3);
  CHECK(partition_count(6) == 11);
  CHECK(partition_count(10) == 42);
}

TEST_CASE("cache round trip") {
  TauStore s;
  s.tau(2, {2, 3});
  s.tau(1, {0, 0, 4});
  std::stringstream ss;
  s.save_cache(ss);
  TauStore t;
  t.load_cache(ss);
  CHECK(t.memo_size() == s.memo_size());
  CHECK(t.tau(2, {2, 3}) == Rational(29, 5760));
}
