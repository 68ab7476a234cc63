#pragma once
// Polynomial ring Q[hbar][u, u', u'', ...] with the derivation d u^(i) = u^(i+1),
// formal integration, and variational derivative.

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "gwvir/exact_core.hpp"

namespace gwvir {

struct DiffMon {
  int hbar = 0;
  std::vector<int> jets;  // jet orders, sorted descending

  auto operator<=>(const DiffMon&) const = default;
  int degree() const { return (int)jets.size(); }
};

class DiffPoly {
 public:
  DiffPoly() = default;

  static DiffPoly constant(const Rational& c);
  static DiffPoly hbar(int power = 1);  // power >= 0
  static DiffPoly jet(int i);           // the generator u^(i)

  const std::map<DiffMon, Rational>& terms() const { return t_; }
  void add_term(const DiffMon& m, const Rational& c);
  Rational coeff(const DiffMon& m) const;
  bool is_zero() const { return t_.empty(); }

  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator*(const Rational& s, const DiffPoly& p);
  bool operator==(const DiffPoly& o) const { return t_ == o.t_; }

  DiffPoly derive() const;         // total x-derivative
  DiffPoly derive(int n) const;    // iterated
  DiffPoly partial(int i) const;   // d/d u^(i)
  int max_jet() const;             // -1 when no jet factor appears

  // antiderivative q with q.derive() == *this, when one exists
  std::optional<DiffPoly> integrate() const;

  // sum_i (-d)^i (d/d u^(i)); vanishes exactly on total derivatives
  DiffPoly variational_derivative() const;

  std::string str() const;

 private:
  std::map<DiffMon, Rational> t_;  // no zero coefficients
};

}  // namespace gwvir
