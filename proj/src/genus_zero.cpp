#include "gwvir/genus_zero.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace gwvir {

bool JetMat::trusted_zero() const {
  return std::all_of(e.begin(), e.end(), [](const Jet& j) { return j.trusted_zero(); });
}

JetMat operator+(const JetMat& a, const JetMat& b) {
  JetMat r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

JetMat operator-(const JetMat& a, const JetMat& b) {
  JetMat r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
  return r;
}

JetMat operator*(const JetMat& a, const JetMat& b) {
  JetMat r(a.r, b.c, a.e.empty() ? b.e.front() : a.e.front());
  for (long i = 0; i < a.r; ++i)
    for (long j = 0; j < b.c; ++j) {
      Jet s = a.at(i, 0);
      s = s - s;  // zero with matching truncation parameters
      for (long k = 0; k < a.c; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

JetMat operator*(const RatMatrix& m, const JetMat& a) {
  JetMat r(m.rows(), a.c, a.e.front());
  for (long i = 0; i < r.r; ++i)
    for (long j = 0; j < r.c; ++j) {
      Jet s = a.at(0, j);
      s = s - s;
      for (long k = 0; k < a.r; ++k) s += m.at(i, k) * a.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

JetMat operator*(const JetMat& a, const RatMatrix& m) {
  JetMat r(a.r, m.cols(), a.e.front());
  for (long i = 0; i < r.r; ++i)
    for (long j = 0; j < r.c; ++j) {
      Jet s = a.at(i, 0);
      s = s - s;
      for (long k = 0; k < a.c; ++k) s += m.at(k, j) * a.at(i, k);
      r.at(i, j) = s;
    }
  return r;
}

JetMat LaurentJetSeries::get(int n, const Jet& zero) const {
  auto it = coeff.find(n);
  if (it != coeff.end()) return it->second;
  return JetMat(r, c, zero);
}

LaurentJetSeries series_mul(const LaurentJetSeries& a, const LaurentJetSeries& b) {
  LaurentJetSeries out;
  out.r = a.r;
  out.c = b.c;
  // above the top stored power the coefficients are genuinely zero, so the
  // untrusted low end of one factor only pollutes powers below this bound
  out.lo = std::max(a.lo + b.hi(), b.lo + a.hi());
  for (auto& [n1, m1] : a.coeff)
    for (auto& [n2, m2] : b.coeff) {
      int n = n1 + n2;
      if (n < out.lo) continue;
      JetMat p = m1 * m2;
      auto it = out.coeff.find(n);
      if (it == out.coeff.end())
        out.coeff.emplace(n, std::move(p));
      else
        it->second = it->second + p;
    }
  return out;
}

G0Env::G0Env(const GWTable& table, const CohModel& model, int D, int M)
    : table_(&table), model_(&model), D_(D), M_(M) {}

Jet G0Env::zero() const { return Jet(D_, (int)var_cut(), 0, 0); }

Jet G0Env::corr(std::vector<std::pair<int, long>> prefix) const {
  std::sort(prefix.begin(), prefix.end());
  auto it = memo_.find(prefix);
  if (it != memo_.end()) return it->second;
  long dim = model_->dim();
  std::vector<std::vector<long>> betas{std::vector<long>(table_->degree_rank, 0)};
  for (auto& b : table_->allowed) betas.push_back(b);
  Jet j = zero();
  std::vector<int> sel;
  std::function<void(long)> rec = [&](long start) {
    auto taus = prefix;
    for (int v : sel) taus.emplace_back((int)(v / dim), v % dim);
    Rational total = 0;
    for (auto& beta : betas) {
      auto val = table_->lookup(*model_, 0, beta, taus);
      if (!val)
        ++indeterminate_;
      else
        total += *val;
    }
    if (total != 0) j.add_term(JetMon{sel}, 0, total / multiset_sym_factor(sel));
    if ((int)sel.size() < D_)
      for (long v = start; v < var_cut(); ++v) {
        sel.push_back((int)v);
        rec(v);
        sel.pop_back();
      }
  };
  rec(0);
  memo_.emplace(std::move(prefix), j);
  return j;
}

Jet G0Env::string_field(const Jet& f) const {
  Jet out = Rational(-1) * f.d((int)var(0, 0));
  for (int m = 1; m < M_; ++m)
    for (long a = 0; a < model_->dim(); ++a)
      out += Jet::monomial(JetMon{{(int)var(m, a)}}, 1, (int)var_cut()) *
             f.d((int)var(m - 1, a));
  return out;
}

LaurentJetSeries G0Env::theta() const {
  long dim = model_->dim();
  RatMatrix ei = model_->eta_inv();
  LaurentJetSeries s;
  s.r = dim;
  s.c = 1;
  s.lo = -zdepth();
  for (int m = 0; m < zdepth(); ++m) {
    JetMat col(dim, 1, zero());
    for (long a = 0; a < dim; ++a)
      for (long b = 0; b < dim; ++b)
        if (ei.at(a, b) != 0) col.at(a, 0) += ei.at(a, b) * corr({{m, b}});
    s.coeff.emplace(-m - 1, std::move(col));
  }
  for (int m = 0; m < M_; ++m) {
    JetMat col(dim, 1, zero());
    Rational sgn((m % 2 == 0) ? 1 : -1);
    for (long a = 0; a < dim; ++a) {
      col.at(a, 0) =
          sgn * Jet::monomial(JetMon{{(int)var(m, a)}}, 1, (int)var_cut());
      if (m == 1 && a == 0)
        col.at(a, 0) += Jet::constant(-sgn, (int)var_cut());
    }
    s.coeff.emplace(m, std::move(col));
  }
  return s;
}

LaurentJetSeries G0Env::big_theta() const {
  long dim = model_->dim();
  RatMatrix ei = model_->eta_inv();
  LaurentJetSeries s;
  s.r = dim;
  s.c = dim;
  s.lo = -zdepth();
  {
    JetMat id(dim, dim, zero());
    for (long a = 0; a < dim; ++a)
      id.at(a, a) = Jet::constant(1, (int)var_cut());
    s.coeff.emplace(0, std::move(id));
  }
  for (int m = 0; m < zdepth(); ++m) {
    JetMat mat(dim, dim, zero());
    for (long a = 0; a < dim; ++a)
      for (long b = 0; b < dim; ++b)
        for (long cc = 0; cc < dim; ++cc)
          if (ei.at(a, cc) != 0)
            mat.at(a, b) += ei.at(a, cc) * corr({{m, cc}, {0, b}});
    s.coeff.emplace(-m - 1, std::move(mat));
  }
  return s;
}

LaurentJetSeries G0Env::adjoint_neg(const LaurentJetSeries& s) const {
  RatMatrix ei = model_->eta_inv();
  LaurentJetSeries out;
  out.r = s.c;
  out.c = s.r;
  out.lo = s.lo;
  for (auto& [n, m] : s.coeff) {
    JetMat t(m.c, m.r, zero());
    for (long i = 0; i < m.r; ++i)
      for (long j = 0; j < m.c; ++j) t.at(j, i) = m.at(i, j);
    JetMat adj = ei * t * model_->eta;
    if (n % 2 != 0)
      for (auto& e : adj.e) e = Rational(-1) * e;
    out.coeff.emplace(n, std::move(adj));
  }
  return out;
}

LaurentJetSeries G0Env::g_series() const {
  LaurentJetSeries th = theta();
  long dim = model_->dim();
  // lowered-index row vector of theta at -zeta
  LaurentJetSeries row;
  row.r = 1;
  row.c = dim;
  row.lo = th.lo;
  for (auto& [n, col] : th.coeff) {
    JetMat rm(1, dim, zero());
    Rational sgn((n % 2 == 0) ? 1 : -1);
    for (long a = 0; a < dim; ++a)
      for (long b = 0; b < dim; ++b)
        if (model_->eta.at(a, b) != 0)
          rm.at(0, a) += sgn * model_->eta.at(a, b) * col.at(b, 0);
    row.coeff.emplace(n, std::move(rm));
  }
  return series_mul(row, big_theta());
}

JetMat G0Env::u_matrix() const {
  long dim = model_->dim();
  RatMatrix ei = model_->eta_inv();
  JetMat u(dim, dim, zero());
  for (long a = 0; a < dim; ++a)
    for (long b = 0; b < dim; ++b)
      for (long cc = 0; cc < dim; ++cc)
        if (ei.at(a, cc) != 0) u.at(a, b) += ei.at(a, cc) * corr({{0, cc}, {0, b}});
  return u;
}

JetMat G0Env::v_matrix() const {
  JetMat u = u_matrix();
  long dim = model_->dim();
  // c_1 cup as an endomorphism acts by the transpose of the stored matrix
  RatMatrix rop = model_->R.transpose();
  RatMatrix mu = model_->mu();
  JetMat v = u + (mu * u - u * mu);
  for (long a = 0; a < dim; ++a)
    for (long b = 0; b < dim; ++b)
      if (rop.at(a, b) != 0)
        v.at(a, b) += Jet::constant(rop.at(a, b), (int)var_cut());
  return v;
}

std::vector<JetMat> G0Env::a_matrices(int k) const {
  long dim = model_->dim();
  JetMat zm(dim, dim, zero());
  JetMat id = zm;
  for (long a = 0; a < dim; ++a) id.at(a, a) = Jet::constant(1, (int)var_cut());
  std::vector<JetMat> prev{id};
  if (k < 0) return prev;
  JetMat v = v_matrix();
  RatMatrix mu = model_->mu();
  for (int kk = 0; kk <= k; ++kk) {
    std::vector<JetMat> next(kk + 2, zm);
    for (int i = 0; i <= kk + 1; ++i) {
      if (i >= 1 && i - 1 < (int)prev.size()) {
        RatMatrix mi = mu;
        for (long a = 0; a < dim; ++a) mi.at(a, a) += Rational(1, 2) - i;
        next[i] = next[i] + mi * prev[i - 1];
      }
      if (i < (int)prev.size()) next[i] = next[i] + v * prev[i];
    }
    prev = std::move(next);
  }
  return prev;
}

LaurentJetSeries G0Env::delta(const LaurentJetSeries& s) const {
  RatMatrix mu = model_->mu();
  RatMatrix rop = model_->R.transpose();
  LaurentJetSeries out;
  out.r = s.r;
  out.c = s.c;
  out.lo = s.lo + 1;
  auto acc = [&](int n, JetMat&& m) {
    if (n < out.lo || m.trusted_zero()) return;
    auto it = out.coeff.find(n);
    if (it == out.coeff.end())
      out.coeff.emplace(n, std::move(m));
    else
      it->second = it->second + m;
  };
  for (auto& [n, m] : s.coeff) {
    // (-zeta^2 d/dzeta + zeta(mu - 1/2)) S contributes at power n+1
    RatMatrix f = mu;
    for (long a = 0; a < f.rows(); ++a) f.at(a, a) += Rational(-1, 2) - n;
    acc(n + 1, f * m);
    acc(n, rop * m);
  }
  return out;
}

namespace {

bool series_trusted_zero(const LaurentJetSeries& s, std::string* witness) {
  for (auto& [n, m] : s.coeff) {
    if (n < s.lo) continue;
    for (long i = 0; i < m.r; ++i)
      for (long j = 0; j < m.c; ++j)
        if (!m.at(i, j).trusted_zero()) {
          if (witness)
            *witness = "zeta^" + std::to_string(n) + " entry (" +
                       std::to_string(i) + "," + std::to_string(j) + "): " +
                       m.at(i, j).witness();
          return false;
        }
  }
  return true;
}

G0Report from_zero(const LaurentJetSeries& s, int checked, const std::string& tag) {
  G0Report rep;
  rep.checked = checked;
  std::string w;
  if (!series_trusted_zero(s, &w)) {
    rep.pass = false;
    rep.detail = tag + ": " + w;
  }
  return rep;
}

}  // namespace

G0Report invert_check(const G0Env& env) {
  LaurentJetSeries th = env.big_theta();
  LaurentJetSeries p = series_mul(th, env.adjoint_neg(th));
  auto it = p.coeff.find(0);
  if (it != p.coeff.end())
    for (long a = 0; a < p.r; ++a)
      it->second.at(a, a) -= Jet::constant(1, (int)env.var_cut());
  return from_zero(p, (int)p.coeff.size(), "Theta Theta*(-zeta) - I");
}

G0Report bilinear_check(const G0Env& env, int kmax) {
  G0Report rep;
  long dim = env.model().dim();
  RatMatrix ei = env.model().eta_inv();
  for (int k = 0; k <= kmax && rep.pass; ++k)
    for (int l = 0; l <= kmax && rep.pass; ++l)
      for (long a = 0; a < dim && rep.pass; ++a)
        for (long b = 0; b < dim && rep.pass; ++b) {
          Jet res = env.zero();
          for (long e = 0; e < dim; ++e)
            for (long f = 0; f < dim; ++f)
              if (ei.at(e, f) != 0)
                res += ei.at(e, f) * (env.corr({{k, a}, {0, e}}) *
                                      env.corr({{0, f}, {l, b}}));
          res -= env.corr({{k, a}, {l + 1, b}});
          res -= env.corr({{k + 1, a}, {l, b}});
          ++rep.checked;
          if (!res.trusted_zero()) {
            rep.pass = false;
            rep.detail = "bilinear (k=" + std::to_string(k) +
                         ",l=" + std::to_string(l) + "): " + res.witness();
          }
        }
  return rep;
}

G0Report g_vanish_check(const G0Env& env, int nmin) {
  LaurentJetSeries g = env.g_series();
  G0Report rep;
  if (g.lo > nmin) {
    rep.pass = false;
    rep.detail = "zeta window too shallow for n=" + std::to_string(nmin);
    return rep;
  }
  for (int n = nmin; n <= 0; ++n) {
    JetMat m = g.get(n, env.zero());
    ++rep.checked;
    for (long j = 0; j < m.c; ++j)
      if (!m.at(0, j).trusted_zero()) {
        rep.pass = false;
        rep.detail = "G[" + std::to_string(n) + "] component " +
                     std::to_string(j) + ": " + m.at(0, j).witness();
        return rep;
      }
  }
  return rep;
}

G0Report fp_check(const G0Env& env, int lmax) {
  G0Report rep;
  long dim = env.model().dim();
  RatMatrix ei = env.model().eta_inv();
  for (int l = 1; l <= lmax && rep.pass; ++l) {
    Jet res = env.zero();
    for (int m = 0; m < env.M(); ++m)
      for (long a = 0; a < dim; ++a) {
        Jet tt = Jet::monomial(JetMon{{(int)env.var(m, a)}}, 1,
                               (int)env.var_cut());
        if (m == 1 && a == 0) tt += Jet::constant(-1, (int)env.var_cut());
        res += tt * env.corr({{m + 2 * l - 1, a}});
      }
    for (int m = 1 - 2 * l; m <= -1; ++m) {
      Rational half((m % 2 == 0) ? 1 : -1, 2);
      for (long a = 0; a < dim; ++a)
        for (long b = 0; b < dim; ++b)
          if (ei.at(a, b) != 0)
            res += (half * ei.at(a, b)) *
                   (env.corr({{-m - 1, a}}) * env.corr({{m + 2 * l - 1, b}}));
    }
    ++rep.checked;
    if (!res.trusted_zero()) {
      rep.pass = false;
      rep.detail = "FP l=" + std::to_string(l) + ": " + res.witness();
    }
  }
  return rep;
}

G0Report string_theta_check(const G0Env& env) {
  LaurentJetSeries th = env.theta();
  LaurentJetSeries res;
  res.r = th.r;
  res.c = th.c;
  res.lo = th.lo + 1;
  for (auto& [n, m] : th.coeff) {
    JetMat sf(m.r, m.c, env.zero());
    for (size_t i = 0; i < m.e.size(); ++i) sf.e[i] = env.string_field(m.e[i]);
    auto it = res.coeff.find(n + 1);
    if (it == res.coeff.end())
      res.coeff.emplace(n + 1, std::move(sf));
    else
      it->second = it->second + sf;
    it = res.coeff.find(n);
    if (it == res.coeff.end())
      res.coeff.emplace(n, m);
    else
      it->second = it->second + m;
  }
  for (auto it = res.coeff.begin(); it != res.coeff.end();)
    it = (it->first < res.lo) ? res.coeff.erase(it) : std::next(it);
  return from_zero(res, (int)res.coeff.size(), "zeta L_{-1} theta + theta");
}

G0Report trr_check(const G0Env& env, int kmax) {
  G0Report rep;
  long dim = env.model().dim();
  RatMatrix ei = env.model().eta_inv();
  for (int k = 0; k <= kmax && rep.pass; ++k)
    for (int l = 0; l <= 1 && rep.pass; ++l)
      for (int m = 0; m <= 1 && rep.pass; ++m)
        for (long a = 0; a < dim && rep.pass; ++a)
          for (long b = 0; b < dim && rep.pass; ++b)
            for (long c = 0; c < dim && rep.pass; ++c) {
              Jet res = env.corr({{k + 1, a}, {l, b}, {m, c}});
              for (long e = 0; e < dim; ++e)
                for (long f = 0; f < dim; ++f)
                  if (ei.at(e, f) != 0)
                    res -= ei.at(e, f) * (env.corr({{k, a}, {0, e}}) *
                                          env.corr({{0, f}, {l, b}, {m, c}}));
              ++rep.checked;
              if (!res.trusted_zero()) {
                rep.pass = false;
                rep.detail = "TRR (k=" + std::to_string(k) + ",l=" +
                             std::to_string(l) + ",m=" + std::to_string(m) +
                             "): " + res.witness();
              }
            }
  return rep;
}

G0Report wdvv_check(const G0Env& env, int kmax) {
  G0Report rep;
  long dim = env.model().dim();
  RatMatrix ei = env.model().eta_inv();
  for (int k = 0; k <= kmax && rep.pass; ++k)
    for (int l = 0; l <= kmax && rep.pass; ++l)
      for (int m = 0; m <= 1 && rep.pass; ++m)
        for (int n = 0; n <= 1 && rep.pass; ++n)
          for (long a = 0; a < dim && rep.pass; ++a)
            for (long b = 0; b < dim && rep.pass; ++b)
              for (long c = 0; c < dim && rep.pass; ++c)
                for (long d = 0; d < dim && rep.pass; ++d) {
                  Jet res = env.zero();
                  for (long e = 0; e < dim; ++e)
                    for (long f = 0; f < dim; ++f) {
                      if (ei.at(e, f) == 0) continue;
                      res += ei.at(e, f) *
                             (env.corr({{k, a}, {l, b}, {0, e}}) *
                              env.corr({{0, f}, {m, c}, {n, d}}));
                      res -= ei.at(e, f) *
                             (env.corr({{k, a}, {m, c}, {0, e}}) *
                              env.corr({{0, f}, {l, b}, {n, d}}));
                    }
                  ++rep.checked;
                  if (!res.trusted_zero()) {
                    rep.pass = false;
                    rep.detail = "WDVV (k=" + std::to_string(k) + ",l=" +
                                 std::to_string(l) + ",m=" + std::to_string(m) +
                                 ",n=" + std::to_string(n) + "): " + res.witness();
                  }
                }
  return rep;
}

G0Report amat_check(const G0Env& env, int kmax) {
  G0Report rep;
  JetMat v = env.v_matrix();
  JetMat pw = v;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<JetMat> a = env.a_matrices(k);
    ++rep.checked;
    if (!(a[0] - pw).trusted_zero()) {
      rep.pass = false;
      rep.detail = "A_{" + std::to_string(k) + ",0} != V^" + std::to_string(k + 1);
      return rep;
    }
    if (k < kmax) pw = pw * v;
  }
  return rep;
}

G0Report uv_delta_check(const G0Env& env) {
  LaurentJetSeries th = env.big_theta();
  LaurentJetSeries p = series_mul(env.adjoint_neg(th), env.delta(th));
  G0Report rep;
  JetMat p0 = p.get(0, env.zero());
  if (!(p0 - env.v_matrix()).trusted_zero()) {
    rep.pass = false;
    rep.detail = "(Theta^-1 delta Theta)[0] != V";
    return rep;
  }
  ++rep.checked;
  JetMat p1 = p.get(1, env.zero());
  RatMatrix mu = env.model().mu();
  for (long a = 0; a < p1.r; ++a)
    p1.at(a, a) -= Jet::constant(mu.at(a, a) - Rational(1, 2), (int)env.var_cut());
  if (!p1.trusted_zero()) {
    rep.pass = false;
    rep.detail = "(Theta^-1 delta Theta)[1] != mu - 1/2";
    return rep;
  }
  ++rep.checked;
  return rep;
}

G0Report iterate_check(const G0Env& env, int kmax) {
  G0Report rep;
  LaurentJetSeries th = env.big_theta();
  for (int k = -1; k <= kmax && rep.pass; ++k) {
    LaurentJetSeries lhs = th;
    for (int i = 0; i <= k; ++i) lhs = env.delta(lhs);
    std::vector<JetMat> a = env.a_matrices(k);
    LaurentJetSeries res = lhs;
    for (int i = 0; i < (int)a.size(); ++i)
      for (auto& [n, m] : th.coeff) {
        int tgt = n + i;
        if (tgt < res.lo) continue;
        JetMat sub = m * a[i];
        auto it = res.coeff.find(tgt);
        if (it == res.coeff.end()) {
          for (auto& e : sub.e) e = Rational(-1) * e;
          res.coeff.emplace(tgt, std::move(sub));
        } else {
          it->second = it->second - sub;
        }
      }
    ++rep.checked;
    std::string w;
    if (!series_trusted_zero(res, &w)) {
      rep.pass = false;
      rep.detail = "iterate k=" + std::to_string(k) + ": " + w;
    }
  }
  return rep;
}

G0Report nabla_z_check(const G0Env& env, int kmax) {
  G0Report rep;
  LaurentJetSeries g = env.g_series();
  for (int k = 0; k <= kmax && rep.pass; ++k) {
    std::vector<JetMat> a = env.a_matrices(k);
    if (g.lo > -(int)(a.size() - 1)) {
      rep.pass = false;
      rep.detail = "zeta window too shallow for k=" + std::to_string(k);
      return rep;
    }
    JetMat sum(1, env.model().dim(), env.zero());
    for (int i = 0; i < (int)a.size(); ++i)
      sum = sum + g.get(-i, env.zero()) * a[i];
    ++rep.checked;
    if (!sum.trusted_zero()) {
      rep.pass = false;
      rep.detail = "nabla z_{" + std::to_string(k) + ",0} != 0";
    }
  }
  return rep;
}

}  // namespace gwvir
