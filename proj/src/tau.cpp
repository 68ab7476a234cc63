#include "gwvir/tau.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gwvir {

TauKey TauKey::make(int g, std::vector<int> ks) {
  std::sort(ks.begin(), ks.end());
  if (!ks.empty() && ks.front() < 0) throw std::invalid_argument("negative index");
  return TauKey{g, std::move(ks)};
}

long TauKey::sum() const { return std::accumulate(ks.begin(), ks.end(), 0L); }

std::string TauKey::str() const {
  std::ostringstream os;
  os << g << ";";
  for (size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
  return os.str();
}

Rational multiset_sym_factor(const std::vector<int>& ks) {
  Rational f = 1;
  long run = 1;
  for (size_t i = 1; i <= ks.size(); ++i) {
    if (i < ks.size() && ks[i] == ks[i - 1]) {
      ++run;
      f *= run;
    } else {
      run = 1;
    }
  }
  return f;
}

Rational TauStore::tau(int g, std::vector<int> ks) {
  return tau(TauKey::make(g, std::move(ks)));
}

Rational TauStore::tau(const TauKey& key) {
  if (!key.stable() || !key.dim_ok()) return 0;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Rational v = compute(key);
  memo_.emplace(key, v);
  return v;
}

Rational TauStore::tau_over_sym(const TauKey& key) {
  return tau(key) / multiset_sym_factor(key.ks);
}

Rational TauStore::genus0_closed(const std::vector<int>& ks) {
  long n = (long)ks.size();
  long s = std::accumulate(ks.begin(), ks.end(), 0L);
  if (n < 3 || s != n - 3) return 0;
  Rational r = factorial(n - 3);
  for (int k : ks) r /= factorial(k);
  return r;
}

std::vector<std::pair<TauKey, Rational>> TauStore::string_reduce(const TauKey& key) {
  if (key.ks.empty() || key.ks.front() != 0)
    throw std::invalid_argument("string reduction needs a tau_0 insertion");
  std::vector<std::pair<TauKey, Rational>> out;
  if (key.g == 0 && key.ks == std::vector<int>{0, 0, 0}) return out;  // base, value 1
  std::vector<int> rest(key.ks.begin() + 1, key.ks.end());
  for (size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == 0) continue;
    if (i > 0 && rest[i] == rest[i - 1]) continue;  // handled with multiplicity
    long mult = std::count(rest.begin(), rest.end(), rest[i]);
    std::vector<int> red = rest;
    red[i] -= 1;
    out.emplace_back(TauKey::make(key.g, std::move(red)), Rational(mult));
  }
  return out;
}

std::optional<std::pair<TauKey, Rational>> TauStore::dilaton_reduce(const TauKey& key) {
  auto it = std::find(key.ks.begin(), key.ks.end(), 1);
  if (it == key.ks.end()) throw std::invalid_argument("dilaton reduction needs a tau_1 insertion");
  if (key.g == 1 && key.ks.size() == 1) return std::nullopt;  // <tau_1>_1 base
  std::vector<int> rest = key.ks;
  rest.erase(std::find(rest.begin(), rest.end(), 1));
  Rational scale = 2 * key.g - 2 + (long)rest.size();
  return std::make_pair(TauKey::make(key.g, std::move(rest)), scale);
}

namespace {

bool trivial_zero(int g, const std::vector<int>& ks) {
  long n = (long)ks.size();
  if (2 * g - 2 + n <= 0) return true;
  long s = std::accumulate(ks.begin(), ks.end(), 0L);
  return s != 3L * g - 3 + n;
}

// enumerate ordered splittings of a multiset into (I, complement) together
// with the product of binomial multiplicities
void enumerate_splits(const std::vector<std::pair<int, long>>& groups, size_t idx,
                      std::vector<int>& I, std::vector<int>& C, Rational mult,
                      const std::function<void(const std::vector<int>&, const std::vector<int>&,
                                               const Rational&)>& fn) {
  if (idx == groups.size()) {
    fn(I, C, mult);
    return;
  }
  auto [v, m] = groups[idx];
  for (long take = 0; take <= m; ++take) {
    size_t i0 = I.size(), c0 = C.size();
    for (long i = 0; i < take; ++i) I.push_back(v);
    for (long i = take; i < m; ++i) C.push_back(v);
    enumerate_splits(groups, idx + 1, I, C, mult * binomial(m, take), fn);
    I.resize(i0);
    C.resize(c0);
  }
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

}  // namespace

Rational TauStore::pivot_rhs(const TauKey& key) {
  // constraint L_k at the pivot K = max index, k = K - 1
  int K = key.ks.back();
  int k = K - 1;
  std::vector<int> S(key.ks.begin(), key.ks.end() - 1);
  int g = key.g;

  Rational rhs = 0;
  // transport terms: raise one remaining index by k
  for (size_t j = 0; j < S.size(); ++j) {
    if (j > 0 && S[j] == S[j - 1]) continue;
    long mult = std::count(S.begin(), S.end(), S[j]);
    std::vector<int> raised = S;
    raised[j] += k;
    if (!trivial_zero(g, raised))
      rhs += Rational(mult) * half_product(S[j], k) * tau(TauKey::make(g, std::move(raised)));
  }
  // quadratic terms
  auto groups = group_multiset(S);
  for (int m = -k; m <= -1; ++m) {
    int a = -m - 1, b = m + k;
    Rational w = Rational(1, 2) * signed_gamma_ratio(m, k);
    // genus drop
    if (g >= 1) {
      std::vector<int> joined = S;
      joined.push_back(a);
      joined.push_back(b);
      std::sort(joined.begin(), joined.end());
      if (!trivial_zero(g - 1, joined)) rhs += w * tau(TauKey{g - 1, joined});
    }
    // splittings
    std::vector<int> I, C;
    enumerate_splits(groups, 0, I, C, 1,
                     [&](const std::vector<int>& I, const std::vector<int>& C, const Rational& mu) {
                       for (int h = 0; h <= g; ++h) {
                         std::vector<int> f1 = I, f2 = C;
                         f1.push_back(a);
                         f2.push_back(b);
                         if (trivial_zero(h, f1) || trivial_zero(g - h, f2)) continue;
                         rhs += w * mu * tau(TauKey::make(h, f1)) * tau(TauKey::make(g - h, f2));
                       }
                     });
  }
  // central constant of L_0 for the point target
  if (k == 0 && S.empty() && g == 1) rhs += Rational(1, 16);
  return rhs;
}

std::pair<Rational, Rational> TauStore::recursion_sides(const TauKey& key) {
  if (key.ks.empty() || key.ks.back() < 1)
    throw std::invalid_argument("pivot recursion needs an index >= 1");
  int k = key.ks.back() - 1;
  return {half_product(1, k), pivot_rhs(key)};
}

Rational TauStore::compute(const TauKey& key) {
  if (key.g == 0 && key.ks == std::vector<int>{0, 0, 0}) return 1;
  if (key.ks.front() == 0) {
    Rational v = 0;
    for (auto& [red, c] : string_reduce(key)) v += c * tau(red);
    return v;
  }
  auto [lead, rhs] = recursion_sides(key);
  return rhs / lead;
}

void TauStore::save_cache(std::ostream& os) const {
  for (auto& [key, v] : memo_) os << key.str() << ";" << rat_str(v) << "\n";
}

void TauStore::load_cache(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string gs, kss, vs;
    if (!std::getline(ls, gs, ';') || !std::getline(ls, kss, ';') || !std::getline(ls, vs))
      throw std::invalid_argument("bad cache line: " + line);
    std::vector<int> ks;
    std::istringstream ks_in(kss);
    std::string tok;
    while (std::getline(ks_in, tok, ','))
      if (!tok.empty()) ks.push_back(std::stoi(tok));
    memo_[TauKey::make(std::stoi(gs), std::move(ks))] = parse_rational(vs);
  }
}

std::vector<IzTerm> genus_potential_iz(TauStore& store, int g) {
  if (g < 2) throw std::invalid_argument("term list defined for g >= 2");
  // multisets {k_i >= 2} with sum (k_i - 1) = 3g - 3, i.e. partitions of 3g-3
  std::vector<IzTerm> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      std::vector<int> ks;
      for (int p : parts) ks.push_back(p + 1);
      std::sort(ks.begin(), ks.end());
      IzTerm t;
      t.uprime_power = 2 * g - 2 + (int)ks.size();
      t.coeff = store.tau(TauKey::make(g, ks)) / multiset_sym_factor(ks);
      t.ks = std::move(ks);
      out.push_back(std::move(t));
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(3 * g - 3, 3 * g - 3);
  return out;
}

long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

}  // namespace gwvir
