#pragma once
// Truncated power series in finitely many commuting variables with Laurent
// coefficients in hbar.  Every jet carries a trust window: coefficients of
// monomials of degree <= deg_cut over variables <= var_cut, with hbar powers
// in [hbar_floor, hbar_trust], are exact; everything outside is dropped.

#include <compare>
#include <map>

#include "gwvir/diffalg.hpp"
#include "gwvir/exact_core.hpp"

namespace gwvir {

struct JetMon {
  std::vector<int> vars;  // variable ids, sorted ascending, with repetition

  auto operator<=>(const JetMon&) const = default;
  int degree() const { return (int)vars.size(); }
  static JetMon merged(const JetMon& a, const JetMon& b);
  std::string str() const;
};

class Jet {
 public:
  static constexpr int kInfDeg = 1 << 20;

  Jet(int deg_cut, int var_cut, int hbar_floor, int hbar_trust)
      : deg_cut_(deg_cut), var_cut_(var_cut), floor_(hbar_floor), trust_(hbar_trust) {}

  // exact polynomial: single monomial times hbar^p, unlimited degree trust
  static Jet monomial(const JetMon& m, const Rational& c, int var_cut, int hbar_power = 0);
  static Jet constant(const Rational& c, int var_cut);

  int deg_cut() const { return deg_cut_; }
  int var_cut() const { return var_cut_; }
  int hbar_floor() const { return floor_; }
  int hbar_trust() const { return trust_; }

  void add_term(const JetMon& m, int hbar_power, const Rational& c);
  Rational coeff(const JetMon& m, int hbar_power) const;
  const std::map<JetMon, HbarLaurent>& terms() const { return c_; }

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  friend Jet operator*(const Rational& s, Jet j);
  Jet times_hbar(int power) const;

  Jet d(int var) const;  // partial derivative, degree trust drops by one

  bool trusted_zero() const { return c_.empty(); }
  // description of some nonzero coefficient, for diagnostics
  std::string witness() const;

 private:
  int deg_cut_, var_cut_, floor_, trust_;
  std::map<JetMon, HbarLaurent> c_;
  bool in_window(const JetMon& m) const;
  void clip(HbarLaurent& h) const;
};

// evaluate a differential polynomial on jets[i] standing for u^(i); terms with
// hbar power above hbar_trust_bound are skipped (they lie outside every
// resulting trust window since the jets have nonnegative hbar floor)
Jet eval_diffpoly(const DiffPoly& p, const std::vector<Jet>& jets, int hbar_trust_bound);

}  // namespace gwvir
