#include "gwvir/kdv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gwvir {

namespace {

bool trivial_zero(int g, const std::vector<int>& ks) {
  long n = (long)ks.size();
  if (2 * g - 2 + n <= 0) return true;
  long s = std::accumulate(ks.begin(), ks.end(), 0L);
  return s != 3L * g - 3 + n;
}

std::vector<std::pair<int, long>> group_multiset(const std::vector<int>& ks) {
  std::vector<std::pair<int, long>> g;
  for (int v : ks) {
    if (!g.empty() && g.back().first == v)
      g.back().second++;
    else
      g.emplace_back(v, 1);
  }
  return g;
}

// all multisets of `count` values in [0, maxval] with the given sum,
// presented as ascending vectors
void for_each_multiset(int sum, int count, int maxval,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int left, int slots, int lo) {
    if (slots == 0) {
      if (left == 0) fn(cur);
      return;
    }
    for (int v = lo; v <= maxval && (long)v * slots <= left; ++v) {
      cur.push_back(v);
      rec(left - v, slots - 1, v);
      cur.pop_back();
    }
  };
  if (sum < 0) return;
  rec(sum, count, 0);
}

}  // namespace

Rational KdvOracle::tau(int g, std::vector<int> ks) {
  return tau(TauKey::make(g, std::move(ks)));
}

Rational KdvOracle::tau(const TauKey& key) {
  if (!key.stable() || !key.dim_ok()) return 0;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Rational v = compute(key);
  memo_.emplace(key, v);
  return v;
}

Rational KdvOracle::ujet_coeff(int i, const std::vector<int>& mu, int h) {
  std::vector<int> ks(i + 2, 0);
  ks.insert(ks.end(), mu.begin(), mu.end());
  TauKey key = TauKey::make(h, std::move(ks));
  if (!key.stable() || !key.dim_ok()) return 0;
  return tau(key) / multiset_sym_factor(mu);
}

Rational KdvOracle::witten_value(int m, const std::vector<int>& X, int g) {
  const DiffPoly& R = gd_.R(m);
  Rational total = 0;
  for (auto& [mon, c] : R.terms()) {
    if (mon.hbar > g) continue;
    const std::vector<int>& jets = mon.jets;
    // sum over ordered exponent splittings of X across the jet factors and
    // compositions of the leftover hbar power across their genera
    std::function<Rational(std::vector<int>, int, size_t)> assign =
        [&](std::vector<int> rem, int h, size_t j) -> Rational {
      if (j == jets.size()) return (rem.empty() && h == 0) ? Rational(1) : Rational(0);
      Rational sum = 0;
      auto groups = group_multiset(rem);
      std::vector<long> take(groups.size());
      std::function<void(size_t)> choose = [&](size_t gi) {
        if (gi == groups.size()) {
          std::vector<int> mu, next;
          for (size_t q = 0; q < groups.size(); ++q) {
            for (long i2 = 0; i2 < take[q]; ++i2) mu.push_back(groups[q].first);
            for (long i2 = take[q]; i2 < groups[q].second; ++i2) next.push_back(groups[q].first);
          }
          for (int hj = 0; hj <= h; ++hj) {
            Rational c1 = ujet_coeff(jets[j], mu, hj);
            if (c1 == 0) continue;
            sum += c1 * assign(next, h - hj, j + 1);
          }
          return;
        }
        for (take[gi] = 0; take[gi] <= groups[gi].second; ++take[gi]) choose(gi + 1);
      };
      choose(0);
      return sum;
    };
    total += c * assign(X, g - mon.hbar, 0);
  }
  return total * multiset_sym_factor(X);
}

Rational KdvOracle::compute(const TauKey& key) {
  if (key.g == 0 && key.ks == std::vector<int>{0, 0, 0}) return 1;
  if (key.ks.front() == 0) {
    // string equation
    std::vector<int> rest(key.ks.begin() + 1, key.ks.end());
    Rational v = 0;
    for (size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == 0) continue;
      if (i > 0 && rest[i] == rest[i - 1]) continue;
      long mult = std::count(rest.begin(), rest.end(), rest[i]);
      std::vector<int> red = rest;
      red[i] -= 1;
      v += Rational(mult) * tau(TauKey::make(key.g, std::move(red)));
    }
    return v;
  }
  // raise the largest index via the string equation run backwards, and read
  // the raised correlator with a tau_0 off the hierarchy equation
  int K = key.ks.back();
  std::vector<int> X(key.ks.begin(), key.ks.end() - 1);
  Rational v = witten_value(K + 2, X, key.g);
  for (size_t i = 0; i < X.size(); ++i) {
    if (i > 0 && X[i] == X[i - 1]) continue;
    long mult = std::count(X.begin(), X.end(), X[i]);
    std::vector<int> corr = X;
    corr[i] -= 1;
    corr.push_back(K + 1);
    v -= Rational(mult) * tau(TauKey::make(key.g, std::move(corr)));
  }
  return v;
}

// PointJets

Jet PointJets::corr(const std::vector<int>& ins) const {
  Jet out(D_, M_, -1, G_ - 1);
  long ins_sum = std::accumulate(ins.begin(), ins.end(), 0L);
  Rational pre = 1;
  if (s_)
    for (int v : ins) pre *= half_product(1, v - 1);
  for (int g = 0; g <= G_; ++g) {
    for (int nmu = 0; nmu <= D_; ++nmu) {
      long target = 3L * g - 3 + (long)ins.size() + nmu - ins_sum;
      if (target < 0) continue;
      for_each_multiset((int)target, nmu, M_, [&](const std::vector<int>& mu) {
        std::vector<int> full = ins;
        full.insert(full.end(), mu.begin(), mu.end());
        TauKey key = TauKey::make(g, std::move(full));
        if (!key.stable()) return;
        Rational v = store_->tau(key);
        if (v == 0) return;
        v = pre * v / multiset_sym_factor(mu);
        if (s_)
          for (int w : mu) v *= half_product(1, w - 1);
        out.add_term(JetMon{mu}, g - 1, v);
      });
    }
  }
  return out;
}

Jet PointJets::ujet(int i) const {
  std::vector<int> ins(i + 2, 0);
  return corr(ins).times_hbar(1);
}

Jet PointJets::K(const Jet& p) const {
  Jet uu = u();
  Jet r = p.d(0).d(0).d(0).times_hbar(1);
  r = Rational(1, 8) * r;
  r += uu * p.d(0);
  r += Rational(1, 2) * (uu.d(0) * p);
  return r;
}

Jet witten_residual(TauStore& store, GelfandDikii& gd, int m, int D, int M, int G) {
  PointJets pj(store, D, M, G, false);
  Jet lhs = pj.corr({m, 0}).times_hbar(1);
  std::vector<Jet> jets;
  for (int i = 0; i <= 2 * G; ++i) jets.push_back(pj.ujet(i));
  Jet rhs = eval_diffpoly(gd.R(m + 1), jets, G);
  return lhs - rhs;
}

Jet z_constraint_jet(TauStore& store, int k, int D, int M, int G) {
  PointJets pj(store, D, M, G, true);
  Jet z(D, M, -1, G - 1);
  for (int m = std::max(0, -k); m <= M; ++m) {
    Rational c(2 * m + 1, 2);
    z += c * (Jet::monomial(JetMon{{m}}, 1, M) * pj.corr({m + k}));
  }
  z -= pj.corr({k + 1});  // the shift of s_1 by 2/3
  if (k == 0) z.add_term(JetMon{}, 0, Rational(1, 16));  // central constant
  if (k == -1) z.add_term(JetMon{{0, 0}}, -1, Rational(1, 2));  // s_0^2/(2 hbar)
  for (int i = 0; i <= k - 1; ++i) {
    int j = k - 1 - i;
    Jet quad = pj.corr({i, j}) + pj.corr({i}) * pj.corr({j});
    z += Rational(1, 8) * quad.times_hbar(1);
  }
  return z;
}

Jet dvv_residual(TauStore& store, int k, int D, int M, int G) {
  PointJets pj(store, D, M, G, true);
  Jet zp = z_constraint_jet(store, k - 1, D, M, G);
  Jet zk = z_constraint_jet(store, k, D, M, G);
  return pj.K(zp.d(0)).d(0) - zk.d(0).d(0).d(0);
}

DvvProofJets dvv_proof_jets(TauStore& store, int k, int D, int M, int G) {
  if (k < 1) throw std::invalid_argument("proof identities need k >= 1");
  PointJets pj(store, D, M, G, true);
  auto s1 = [&](int i) { return pj.corr({i}); };
  Jet u = pj.u();

  Jet a = s1(k).d(0);
  a -= Rational(1, 8) * s1(k - 1).d(0).d(0).d(0).times_hbar(1);
  a -= u * s1(k - 1).d(0);
  for (int i = 0; i <= k - 1; ++i)
    a += Rational(1, 4) * (s1(i).d(0) * s1(k - 1 - i).d(0)).times_hbar(1);

  Jet b(a.deg_cut(), M, a.hbar_floor(), a.hbar_trust());
  for (int i = 0; i <= k - 2; ++i) {
    int j = k - 2 - i;
    Jet inner = Rational(1, 8) * (s1(i).d(0) * s1(j).d(0).d(0).d(0)).times_hbar(1);
    inner -= Rational(1, 16) * (s1(i).d(0).d(0) * s1(j).d(0).d(0)).times_hbar(1);
    inner += Rational(1, 2) * (u * s1(i).d(0) * s1(j).d(0));
    b -= Rational(1, 2) * inner.times_hbar(1);
  }

  DvvProofJets out{a, b, a.d(0), b.d(0), a.d(0) + b.d(0)};
  for (int i = 0; i <= k - 2; ++i) {
    int j = k - 2 - i;
    out.da_residual -= Rational(1, 2) * (s1(i).d(0) * s1(j + 1).d(0).d(0)).times_hbar(1);
    out.db_residual += Rational(1, 2) * (s1(i).d(0) * pj.K(s1(j).d(0))).times_hbar(1);
  }
  return out;
}

}  // namespace gwvir
