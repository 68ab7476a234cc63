#pragma once
// Genus zero apparatus on jets: the theta and Theta Laurent series, the G
// series and its vanishing, U and V matrices, the A recursion, TRR, WDVV and
// the vanishing combinations tied to the string and dilaton directions.
// Everything is restricted to the locus t_{m,a} = 0 for m >= M and truncated
// at total degree D.

#include "gwvir/gw_table.hpp"
#include "gwvir/jet.hpp"

namespace gwvir {

// matrix with jet entries
struct JetMat {
  long r = 0, c = 0;
  std::vector<Jet> e;

  JetMat(long rows, long cols, const Jet& fill)
      : r(rows), c(cols), e(rows * cols, fill) {}
  Jet& at(long i, long j) { return e[i * c + j]; }
  const Jet& at(long i, long j) const { return e[i * c + j]; }
  bool trusted_zero() const;
};

JetMat operator+(const JetMat& a, const JetMat& b);
JetMat operator-(const JetMat& a, const JetMat& b);
JetMat operator*(const JetMat& a, const JetMat& b);
JetMat operator*(const RatMatrix& m, const JetMat& a);
JetMat operator*(const JetMat& a, const RatMatrix& m);

// Laurent series in zeta with JetMat coefficients; coefficients below lo are
// untrusted (truncated away), coefficients above the largest stored power are
// genuinely zero
struct LaurentJetSeries {
  long r = 0, c = 0;
  int lo = 0;
  std::map<int, JetMat> coeff;

  JetMat get(int n, const Jet& zero) const;
  int hi() const { return coeff.empty() ? lo - 1 : coeff.rbegin()->first; }
};

LaurentJetSeries series_mul(const LaurentJetSeries& a, const LaurentJetSeries& b);

// genus-0 evaluation environment over a correlator table
class G0Env {
 public:
  G0Env(const GWTable& table, const CohModel& model, int D, int M);

  const CohModel& model() const { return *model_; }
  int D() const { return D_; }
  int M() const { return M_; }
  int zdepth() const { return M_ + 3; }
  long var(int m, long a) const { return (long)m * model_->dim() + a; }
  long var_cut() const { return (long)M_ * model_->dim(); }
  Jet zero() const;
  int indeterminate() const { return indeterminate_; }

  // jet of <<tau_prefix>>_0 in the variables t_{m,a}, m < M
  Jet corr(std::vector<std::pair<int, long>> prefix) const;

  // the string vector field -d_{0,0} + sum_{m>=1} t_m^a d_{m-1,a}
  Jet string_field(const Jet& f) const;

  LaurentJetSeries theta() const;        // column vector
  LaurentJetSeries big_theta() const;    // dim x dim, I + negative powers
  // S*(-zeta): transpose conjugated by eta with zeta -> -zeta
  LaurentJetSeries adjoint_neg(const LaurentJetSeries& s) const;
  LaurentJetSeries g_series() const;     // theta*(-zeta) Theta, row vector

  JetMat u_matrix() const;               // eta^{ac}<<tau_{0,c}tau_{0,b}>>
  JetMat v_matrix() const;               // U + R + [mu, U]
  std::vector<JetMat> a_matrices(int k) const;  // A_{k,0..k+1}

  // -zeta^2 d/dzeta + zeta(mu - 1/2) + R applied per zeta power
  LaurentJetSeries delta(const LaurentJetSeries& s) const;

 private:
  const GWTable* table_;
  const CohModel* model_;
  int D_, M_;
  mutable std::map<std::vector<std::pair<int, long>>, Jet> memo_;
  mutable int indeterminate_ = 0;
};

struct G0Report {
  bool pass = true;
  int checked = 0;
  std::string detail;
};

G0Report invert_check(const G0Env& env);            // Theta(z) Theta*(-z) = I
G0Report bilinear_check(const G0Env& env, int kmax);
G0Report g_vanish_check(const G0Env& env, int nmin);  // G[n] = 0, nmin<=n<=0
G0Report fp_check(const G0Env& env, int lmax);
G0Report string_theta_check(const G0Env& env);  // zeta L_{-1} theta + theta = 0
G0Report trr_check(const G0Env& env, int kmax);
G0Report wdvv_check(const G0Env& env, int kmax);
G0Report amat_check(const G0Env& env, int kmax);  // A_{k,0} = V^{k+1}
G0Report uv_delta_check(const G0Env& env);  // (Theta^-1 delta Theta)[0] = V
G0Report iterate_check(const G0Env& env, int kmax);
G0Report nabla_z_check(const G0Env& env, int kmax);  // sum G[-i] A_{k,i} = 0

}  // namespace gwvir
