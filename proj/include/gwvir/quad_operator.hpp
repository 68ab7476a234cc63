#pragma once
// Truncated quadratic differential operators on the large phase space, the
// section from symbols to operators, the direct construction of the Virasoro
// operators, their commutators, and the free-field symbol test.

#include "gwvir/psi_symbol.hpp"

namespace gwvir {

// (1/2hbar) t'Tt + t'L del + w'del + (hbar/2) del'D del + scalar, in the
// shifted coordinates (t_1^0 is shifted by -1).  Variables are indexed by
// (m, a) with m < M flattened to m*dim + a.  Coefficients whose m-indices all
// lie below `trust` are exact; the rest may be corrupted by truncation.
class QuadOperator {
 public:
  QuadOperator(long dim, int M, int shift);

  long dim() const { return dim_; }
  int cutoff() const { return M_; }
  int shift() const { return shift_; }
  int trust() const { return trust_; }
  void set_trust(int t) { trust_ = t; }
  long index(int m, long a) const { return (long)m * dim_ + a; }

  const RatMatrix& T() const { return T_; }
  const RatMatrix& L() const { return L_; }
  const RatMatrix& D() const { return D_; }
  const std::vector<Rational>& w() const { return w_; }
  const HbarLaurent& scalar() const { return scalar_; }

  void add_tt(long i, long j, const Rational& c);  // (1/2hbar) c t_i t_j
  void add_td(long i, long j, const Rational& c);  // c t_i del_j
  void add_dd(long i, long j, const Rational& c);  // (hbar/2) c del_i del_j
  void add_d(long j, const Rational& c);           // c del_j
  void add_scalar(int hbar_power, const Rational& c);

  bool w_is_zero() const;

  friend QuadOperator operator+(const QuadOperator& a, const QuadOperator& b);
  friend QuadOperator operator-(const QuadOperator& a, const QuadOperator& b);
  friend QuadOperator operator*(const Rational& s, QuadOperator a);

 private:
  long dim_;
  int M_, shift_, trust_;
  RatMatrix T_, L_, D_;
  std::vector<Rational> w_;
  HbarLaurent scalar_;
  friend QuadOperator quad_commutator(const QuadOperator&, const QuadOperator&);
};

// exact commutator; requires vanishing pure-del parts, trusted window shrinks
QuadOperator quad_commutator(const QuadOperator& a, const QuadOperator& b);

// compare all blocks on the common trusted window; optional failure witness
bool trusted_equal(const QuadOperator& a, const QuadOperator& b,
                   std::string* witness = nullptr);
bool trusted_zero(const QuadOperator& a, std::string* witness = nullptr);

// the natural section of the symbol map, assembled in shifted coordinates
QuadOperator sigma_inverse(const CohModel& model, const PsiSymbol& s, int M);

// literal assembly of the defining operator formula; the pure-del column is
// required to cancel against the coordinate shift and is asserted zero
QuadOperator build_Lk_direct(const CohModel& model, int k, int M,
                             const Rational& s = 0);

struct QuadReport {
  bool pass = true;
  std::string detail;
};

// defining identity sigma(delta) phi(z) + [delta, phi(z)] = 0 on the free
// field, checked coefficientwise inside the trusted window
QuadReport free_field_symbol_check(const CohModel& model, const QuadOperator& op,
                                   const PsiSymbol& sym, int M);

// c(sigma L_k, sigma L_l) == 2 delta_{k+l,0} rho for -1 <= k,l <= kmax
QuadReport central_term_check(const CohModel& model, int kmax);

// [L_1^s, L_-1] = 2 L_0^s - s(s-1)/2 rho_tilde; symbol route for all models,
// operator route additionally when the model has no odd classes
QuadReport modified_virasoro_check(const CohModel& model, const Rational& s, int M);

}  // namespace gwvir
