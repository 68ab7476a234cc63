#include "gwvir/quad_operator.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace gwvir {

QuadOperator::QuadOperator(long dim, int M, int shift)
    : dim_(dim),
      M_(M),
      shift_(shift),
      trust_(M),
      T_(dim * M, dim * M),
      L_(dim * M, dim * M),
      D_(dim * M, dim * M),
      w_(dim * M) {}

void QuadOperator::add_tt(long i, long j, const Rational& c) {
  Rational h = c / 2;
  T_.at(i, j) += h;
  T_.at(j, i) += h;
}

void QuadOperator::add_td(long i, long j, const Rational& c) { L_.at(i, j) += c; }

void QuadOperator::add_dd(long i, long j, const Rational& c) {
  Rational h = c / 2;
  D_.at(i, j) += h;
  D_.at(j, i) += h;
}

void QuadOperator::add_d(long j, const Rational& c) { w_[j] += c; }

void QuadOperator::add_scalar(int hbar_power, const Rational& c) {
  scalar_.add(hbar_power, c);
}

bool QuadOperator::w_is_zero() const {
  for (auto& v : w_)
    if (v != 0) return false;
  return true;
}

QuadOperator operator+(const QuadOperator& a, const QuadOperator& b) {
  if (a.dim_ != b.dim_ || a.M_ != b.M_) throw std::invalid_argument("cutoff mismatch");
  QuadOperator r(a.dim_, a.M_, std::max(a.shift_, b.shift_));
  r.trust_ = std::min(a.trust_, b.trust_);
  r.T_ = a.T_ + b.T_;
  r.L_ = a.L_ + b.L_;
  r.D_ = a.D_ + b.D_;
  for (size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = a.w_[i] + b.w_[i];
  r.scalar_ = a.scalar_ + b.scalar_;
  return r;
}

QuadOperator operator-(const QuadOperator& a, const QuadOperator& b) {
  return a + (Rational(-1) * b);
}

QuadOperator operator*(const Rational& s, QuadOperator a) {
  a.T_ = s * a.T_;
  a.L_ = s * a.L_;
  a.D_ = s * a.D_;
  for (auto& v : a.w_) v *= s;
  a.scalar_ *= s;
  return a;
}

QuadOperator quad_commutator(const QuadOperator& a, const QuadOperator& b) {
  if (a.dim_ != b.dim_ || a.M_ != b.M_) throw std::invalid_argument("cutoff mismatch");
  if (!a.w_is_zero() || !b.w_is_zero())
    throw std::invalid_argument("commutator requires vanishing pure-del parts");
  QuadOperator r(a.dim_, a.M_, a.shift_ + b.shift_);
  r.trust_ = std::min(a.trust_, b.trust_) - std::max(a.shift_, b.shift_) - 1;
  RatMatrix LAt = a.L_.transpose(), LBt = b.L_.transpose();
  r.T_ = a.L_ * b.T_ + b.T_ * LAt - b.L_ * a.T_ - a.T_ * LBt;
  r.L_ = a.L_ * b.L_ - b.L_ * a.L_ - a.T_ * b.D_ + b.T_ * a.D_;
  r.D_ = (LBt * a.D_ + a.D_ * b.L_) - (LAt * b.D_ + b.D_ * a.L_);
  Rational s = ((b.T_ * a.D_).trace() - (a.T_ * b.D_).trace()) / 2;
  if (s != 0) r.scalar_.add(0, s);
  return r;
}

bool trusted_zero(const QuadOperator& a, std::string* witness) {
  long d = a.dim();
  int win = a.trust();
  auto report = [&](const char* block, long i, long j, const Rational& v) {
    if (witness) {
      std::ostringstream os;
      os << block << "[(" << i / d << "," << i % d << "),(" << j / d << "," << j % d
         << ")] = " << rat_str(v);
      *witness = os.str();
    }
    return false;
  };
  for (long i = 0; i < (long)d * win; ++i)
    for (long j = 0; j < (long)d * win; ++j) {
      if (a.T().at(i, j) != 0) return report("tt", i, j, a.T().at(i, j));
      if (a.L().at(i, j) != 0) return report("td", i, j, a.L().at(i, j));
      if (a.D().at(i, j) != 0) return report("dd", i, j, a.D().at(i, j));
    }
  for (long j = 0; j < (long)d * win; ++j)
    if (a.w()[j] != 0) return report("d", j, j, a.w()[j]);
  if (!a.scalar().is_zero()) {
    if (witness) *witness = "scalar = " + a.scalar().str();
    return false;
  }
  return true;
}

bool trusted_equal(const QuadOperator& a, const QuadOperator& b, std::string* witness) {
  QuadOperator d = a - b;
  d.set_trust(std::min(a.trust(), b.trust()));
  return trusted_zero(d, witness);
}

QuadOperator sigma_inverse(const CohModel& model, const PsiSymbol& s, int M) {
  long d = model.dim();
  int shift = 0;
  for (auto& [k, f] : s.components()) shift = std::max(shift, std::abs(k));
  QuadOperator op(d, M, shift);
  RatMatrix eta_inv = model.eta_inv();
  for (auto& [k, f] : s.components()) {
    // del-del block, m in 0..-k-1; the sign and the raised index follow the
    // paired slot q, the evaluation point the slot m
    for (int m = 0; m <= -k - 1; ++m) {
      int q = -k - m - 1;
      if (m >= M || q >= M) continue;
      RatMatrix C = f.eval(Rational(2 * m + 1, 2)).transpose() * eta_inv;
      Rational sign = (q % 2 == 0) ? 1 : -1;
      for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
          if (C.at(a, b) != 0) op.add_dd(op.index(m, a), op.index(q, b), sign * C.at(a, b));
    }
    // t-del block, m >= max(0, -k)
    for (int m = std::max(0, -k); m < M && m + k < M; ++m) {
      RatMatrix F = f.eval(Rational(2 * m + 1, 2));
      for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
          if (F.at(a, b) != 0) op.add_td(op.index(m + k, a), op.index(m, b), -F.at(a, b));
    }
    // t-t block, m in 0..k-1
    for (int m = 0; m <= k - 1; ++m) {
      if (m >= M || k - m - 1 >= M) continue;
      RatMatrix G = f.eval(Rational(2 * (m - k) + 1, 2)) * model.eta;
      Rational sign = (m % 2 == 0) ? -1 : 1;
      for (long a = 0; a < d; ++a)
        for (long c = 0; c < d; ++c)
          if (G.at(a, c) != 0)
            op.add_tt(op.index(m, a), op.index(k - m - 1, c), sign * G.at(a, c));
    }
  }
  return op;
}

QuadOperator build_Lk_direct(const CohModel& model, int k, int M, const Rational& s) {
  if (k < -1) throw std::invalid_argument("k >= -1 required");
  long d = model.dim();
  QuadOperator op(d, M, std::max(1, std::abs(k)));
  RatMatrix eta_inv = model.eta_inv();
  RatMatrix Ri = RatMatrix::identity(d);
  for (int i = 0; i <= k + 1; ++i) {
    if (i > 0) Ri = Ri * model.R;
    // del-del block: hbar/2 (-1)^m [mu_c+m+1/2]^k_i eta^{ca} R^i_c^b
    // del_{-m-1,a} del_{m+k-i,b}: the pairing raises the first slot, the
    // Chern power feeds the second, the bracket sits on the shared lower index
    for (int m = i - k; m <= -1; ++m) {
      if (-m - 1 >= M || m + k - i >= M) continue;
      Rational sign = (((-m) % 2) == 0) ? 1 : -1;
      for (long c = 0; c < d; ++c) {
        Rational br = bracket(model.mu_entry(c, s) + m + Rational(1, 2), k, i);
        if (br == 0) continue;
        for (long a = 0; a < d; ++a)
          for (long b = 0; b < d; ++b)
            if (eta_inv.at(c, a) != 0 && Ri.at(c, b) != 0)
              op.add_dd(op.index(-m - 1, a), op.index(m + k - i, b),
                        sign * br * eta_inv.at(c, a) * Ri.at(c, b));
      }
    }
    // lone del column: -[(3-r)/2]^k_i (R^i)_0^b del_{k-i+1,b}
    if (k - i + 1 < M) {
      Rational br0 = bracket(Rational(3 - model.r, 2), k, i);
      for (long b = 0; b < d; ++b)
        if (Ri.at(0, b) != 0) op.add_d(op.index(k - i + 1, b), -br0 * Ri.at(0, b));
    }
    // t-del block: [mu_a+m+1/2]^k_i (R^i)_a^b t^a_m del_{m+k-i,b}
    for (int m = std::max(0, i - k); m < M && m + k - i < M; ++m) {
      for (long a = 0; a < d; ++a) {
        Rational br = bracket(model.mu_entry(a, s) + m + Rational(1, 2), k, i);
        if (br == 0) continue;
        for (long b = 0; b < d; ++b)
          if (Ri.at(a, b) != 0)
            op.add_td(op.index(m, a), op.index(m + k - i, b), br * Ri.at(a, b));
      }
    }
    // t_1^0 = shifted + 1 turns the (m,a) = (1,0) column into a pure-del term
    if (1 + k - i >= 0 && 1 + k - i < M) {
      Rational br1 = bracket(model.mu_entry(0, s) + Rational(3, 2), k, i);
      for (long b = 0; b < d; ++b)
        if (Ri.at(0, b) != 0) op.add_d(op.index(1 + k - i, b), br1 * Ri.at(0, b));
    }
  }
  // (1/2hbar) (R^{k+1})_{ab} t^a_0 t^b_0, indices lowered with the pairing
  RatMatrix Rk1 = model.R.pow(k + 1) * model.eta;
  for (long a = 0; a < d; ++a)
    for (long b = 0; b < d; ++b)
      if (Rk1.at(a, b) != 0) op.add_tt(op.index(0, a), op.index(0, b), Rk1.at(a, b));
  if (k == 0) op.add_scalar(0, model.rho());
  // the lone del column must cancel against the coordinate shift
  if (!op.w_is_zero()) throw std::logic_error("shift cancellation failed");
  return op;
}

namespace {

// coefficient of z^{alpha-k} in del^k z^alpha; alpha a half-integer
Rational del_power_factor(const Rational& alpha, int k) {
  Rational f = 1;
  if (k >= 0)
    for (int j = 0; j < k; ++j) f *= alpha - j;
  else
    for (int j = 1; j <= -k; ++j) f /= alpha + j;
  return f;
}

}  // namespace

QuadReport free_field_symbol_check(const CohModel& model, const QuadOperator& op,
                                   const PsiSymbol& sym, int M) {
  long d = model.dim();
  RatMatrix eta_inv = model.eta_inv();
  int maxshift = op.shift();
  for (auto& [k, f] : sym.components()) maxshift = std::max(maxshift, std::abs(k));
  // key: twice the z-power, variable kind (0: t, 1: hbar del), variable index,
  // free field component; value must cancel between the two routes
  std::map<std::tuple<int, int, long, long>, Rational> acc;
  auto add = [&](int two_alpha, int kind, long var, long a, const Rational& v) {
    if (v == 0) return;
    auto key = std::make_tuple(two_alpha, kind, var, a);
    auto it = acc.emplace(key, 0).first;
    it->second += v;
    if (it->second == 0) acc.erase(it);
  };
  // sigma(delta) applied to the free field
  for (auto& [k, f] : sym.components()) {
    for (int m = 0; m < M; ++m) {
      Rational cm = 1 / half_product(0, m);        // creation coefficient
      Rational dm = half_product(0, m - 1);        // annihilation coefficient
      Rational ac = Rational(2 * m + 1, 2);        // z-power of the creation term
      RatMatrix Fc = f.eval(ac - k);
      Rational fac_c = cm * del_power_factor(ac, k);
      RatMatrix Fd = f.eval(-ac - k);
      Rational fac_d = dm * del_power_factor(-ac, k);
      for (long a = 0; a < d; ++a)
        for (long c = 0; c < d; ++c) {
          if (Fc.at(c, a) != 0)
            add(2 * m + 1 - 2 * k, 0, op.index(m, c), a, fac_c * Fc.at(c, a));
          for (long b = 0; b < d; ++b)
            if (eta_inv.at(c, b) != 0 && Fd.at(c, a) != 0)
              add(-2 * m - 1 - 2 * k, 1, op.index(m, b), a,
                  -fac_d * eta_inv.at(c, b) * Fd.at(c, a));
        }
    }
  }
  // [delta, phi]: creation side [delta, t] = L't + hbar D del,
  // annihilation side [delta, del] = -L del - (1/hbar) T t
  for (int m = 0; m < M; ++m) {
    Rational cm = 1 / half_product(0, m);
    Rational dm = half_product(0, m - 1);
    for (long a = 0; a < d; ++a) {
      long ia = op.index(m, a);
      for (long J = 0; J < (long)d * M; ++J) {
        if (op.L().at(J, ia) != 0) add(2 * m + 1, 0, J, a, cm * op.L().at(J, ia));
        if (op.D().at(ia, J) != 0) add(2 * m + 1, 1, J, a, cm * op.D().at(ia, J));
      }
      for (long b = 0; b < d; ++b) {
        if (eta_inv.at(a, b) == 0) continue;
        long ib = op.index(m, b);
        for (long J = 0; J < (long)d * M; ++J) {
          if (op.L().at(ib, J) != 0)
            add(-2 * m - 1, 1, J, a, dm * eta_inv.at(a, b) * op.L().at(ib, J));
          if (op.T().at(ib, J) != 0)
            add(-2 * m - 1, 0, J, a, dm * eta_inv.at(a, b) * op.T().at(ib, J));
        }
      }
    }
  }
  QuadReport rep;
  for (auto& [key, v] : acc) {
    auto [two_alpha, kind, var, a] = key;
    int var_m = (int)(var / d);
    int src_m = (std::abs(two_alpha) - 1) / 2;
    if (var_m + maxshift >= M || src_m + maxshift >= M) continue;  // truncation zone
    std::ostringstream os;
    os << "residual at z^(" << two_alpha << "/2), " << (kind ? "del" : "t") << "_("
       << var_m << "," << var % d << "), component " << a << ": " << rat_str(v);
    rep.pass = false;
    rep.detail = os.str();
    return rep;
  }
  rep.detail = "free field identity holds on the trusted window";
  return rep;
}

QuadReport central_term_check(const CohModel& model, int kmax) {
  QuadReport rep;
  std::ostringstream bad;
  for (int k = -1; k <= kmax; ++k)
    for (int l = -1; l <= kmax; ++l) {
      Rational c = cocycle(model, symbol_Lk(model, k), symbol_Lk(model, l));
      Rational expect = (k + l == 0) ? Rational(k - l) * model.rho() : Rational(0);
      if (c != expect) {
        rep.pass = false;
        bad << " (" << k << "," << l << "): " << rat_str(c) << " != " << rat_str(expect);
      }
    }
  rep.detail = rep.pass ? "central terms match 2 delta_{k+l,0} rho" : "mismatch at" + bad.str();
  return rep;
}

QuadReport modified_virasoro_check(const CohModel& model, const Rational& s, int M) {
  QuadReport rep;
  PsiSymbol s1 = symbol_Lk(model, 1, s);
  PsiSymbol sm1 = symbol_Lk(model, -1, s);
  PsiSymbol s0 = symbol_Lk(model, 0, s);
  Rational defect = -s * (s - 1) / 2 * model.rho_tilde();
  if (!(psi_commutator(s1, sm1) == Rational(2) * s0)) {
    rep.pass = false;
    rep.detail = "symbol-level [L_1^s, L_-1] != 2 L_0^s";
    return rep;
  }
  Rational c = cocycle(model, s1, sm1);
  if (c - 2 * model.rho() != defect) {
    rep.pass = false;
    rep.detail = "central defect " + rat_str(c - 2 * model.rho()) + " != " + rat_str(defect);
    return rep;
  }
  if (model.is_even()) {
    QuadOperator A = build_Lk_direct(model, 1, M, s);
    QuadOperator B = build_Lk_direct(model, -1, M, s);
    QuadOperator expect = Rational(2) * build_Lk_direct(model, 0, M, s);
    expect.add_scalar(0, defect);
    std::string w;
    if (!trusted_equal(quad_commutator(A, B), expect, &w)) {
      rep.pass = false;
      rep.detail = "operator-level mismatch: " + w;
      return rep;
    }
    rep.detail = "modified relation holds (symbol and operator routes), defect " +
                 rat_str(defect);
  } else {
    rep.detail = "modified relation holds (symbol route; odd classes), defect " +
                 rat_str(defect);
  }
  return rep;
}

}  // namespace gwvir
