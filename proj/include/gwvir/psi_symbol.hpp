#pragma once
// Pseudodifferential symbols in normal form sum_k f_k(D) del^k with matrix
// polynomial coefficients, their composition, the Virasoro symbols, and the
// central two-cocycle.

#include <map>

#include "gwvir/coh_model.hpp"
#include "gwvir/exact_core.hpp"

namespace gwvir {

// polynomial in the formal variable D with RatMatrix coefficients
class MatPoly {
 public:
  MatPoly() = default;
  explicit MatPoly(long dim) : dim_(dim) {}
  static MatPoly constant(const RatMatrix& m);
  static MatPoly variable(long dim);  // D times identity

  long dim() const { return dim_; }
  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  RatMatrix coeff(int j) const;
  void set_coeff(int j, const RatMatrix& m);
  bool is_zero() const { return c_.empty(); }

  RatMatrix eval(const Rational& x) const;
  MatPoly shifted(const Rational& s) const;  // f(D + s)
  MatPoly negated_argument() const;          // f(-D)

  friend MatPoly operator+(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator-(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const Rational& s, const MatPoly& p);
  bool operator==(const MatPoly& o) const;

 private:
  long dim_ = 0;
  std::vector<RatMatrix> c_;  // c_[j] = coefficient of D^j
  void trim();
};

class PsiSymbol {
 public:
  explicit PsiSymbol(long dim) : dim_(dim) {}
  static PsiSymbol del(long dim, int k);                      // del^k
  static PsiSymbol term(const MatPoly& f, int k);             // f(D) del^k

  long dim() const { return dim_; }
  const std::map<int, MatPoly>& components() const { return comp_; }
  void add_component(int k, const MatPoly& f);
  bool is_zero() const { return comp_.empty(); }

  friend PsiSymbol operator+(const PsiSymbol& a, const PsiSymbol& b);
  friend PsiSymbol operator-(const PsiSymbol& a, const PsiSymbol& b);
  friend PsiSymbol operator*(const Rational& s, const PsiSymbol& p);
  bool operator==(const PsiSymbol& o) const;

 private:
  long dim_;
  std::map<int, MatPoly> comp_;
};

// normal form product: f(D) del^k  o  g(D) del^l = f(D) g(D+k) del^{k+l}
PsiSymbol psi_mul(const PsiSymbol& a, const PsiSymbol& b);
PsiSymbol psi_commutator(const PsiSymbol& a, const PsiSymbol& b);

// -(z + mu del^-1 + R)^{k+1} del, with mu at grading parameter s
PsiSymbol symbol_Lk(const CohModel& model, int k, const Rational& s = 0);

Rational cocycle(const CohModel& model, const PsiSymbol& a, const PsiSymbol& b);

// f_k(-t) == (-1)^{k+1} f_k^*(t-k) with the eta-adjoint; even models
bool parity_normal_form_check(const CohModel& model, const PsiSymbol& s);

}  // namespace gwvir
