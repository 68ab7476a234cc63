#pragma once
// Finite models of the cohomology of a smooth projective variety: basis with
// Hodge bidegrees, Poincare pairing, c_1 multiplication, Chern integrals.

#include <iosfwd>
#include <string>
#include <vector>

#include "gwvir/exact_core.hpp"

namespace gwvir {

struct BasisClass {
  std::string label;
  int p = 0, q = 0;
  bool odd() const { return (p + q) % 2 != 0; }
};

class CohModel {
 public:
  int r = 0;                       // complex dimension
  std::vector<BasisClass> basis;   // index 0 is the identity class
  RatMatrix eta;                   // eta_{ab} = integral of a cup b
  RatMatrix R;                     // R_a^b: c_1 cup gamma_a = R_a^b gamma_b
  Rational chern_cr;               // integral of c_r = Euler characteristic
  Rational chern_c1crm1;           // integral of c_1 c_{r-1}

  long dim() const { return (long)basis.size(); }
  bool is_even() const;

  static CohModel point();
  static CohModel projective_space(int r);
  static CohModel genus2_curve();
  static CohModel product(const CohModel& a, const CohModel& b);  // even factors
  static CohModel builtin(const std::string& name);  // point, P1..P4, genus2, AxB

  static CohModel parse(std::istream& is);
  std::string emit() const;

  std::vector<std::string> validate() const;  // list of invariant violations

  // diag((1-s)(p_a - r/2) + s(q_a - r/2))
  RatMatrix mu(const Rational& s = 0) const;
  Rational mu_entry(long a, const Rational& s = 0) const;

  Rational rho() const;        // (1/48) int((3-r)c_r - 2 c_1 c_{r-1})
  Rational rho_tilde() const;  // Str((mu - mubar)^2)
  Rational str(const RatMatrix& m) const;  // supertrace with basis parities

  struct LibgoberResult {
    Rational lhs, rhs;
    bool pass;
  };
  LibgoberResult libgober_check() const;

  long vdim(int g, long beta_c1, int n) const;

  RatMatrix eta_inv() const;
};

}  // namespace gwvir
