#include "gwvir/gw_table.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gwvir {

namespace {

bool all_zero(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string beta_str(const std::vector<long>& beta) {
  std::string s;
  for (size_t i = 0; i < beta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(beta[i]);
  }
  return s;
}

std::string taus_str(const std::vector<std::pair<int, long>>& taus) {
  std::string s;
  for (auto& [k, a] : taus)
    s += "(" + std::to_string(k) + "," + std::to_string(a) + ")";
  return s;
}

std::vector<long> parse_beta(const std::string& field) {
  std::vector<long> v;
  std::string t = trim(field);
  if (t.empty()) return v;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stol(trim(part)));
  return v;
}

std::vector<std::pair<int, long>> parse_taus(const std::string& field) {
  std::vector<std::pair<int, long>> taus;
  std::string t = trim(field);
  size_t pos = 0;
  while (pos < t.size()) {
    size_t open = t.find('(', pos);
    if (open == std::string::npos) break;
    size_t comma = t.find(',', open);
    size_t close = t.find(')', open);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("malformed insertion list: " + field);
    taus.emplace_back(std::stoi(t.substr(open + 1, comma - open - 1)),
                      std::stol(t.substr(comma + 1, close - comma - 1)));
    pos = close + 1;
  }
  return taus;
}

}  // namespace

int canonical_sign(const CohModel* model, std::vector<std::pair<int, long>>& taus) {
  int sign = 1;
  // insertion sort, flipping the sign when two odd-class insertions cross
  for (size_t i = 1; i < taus.size(); ++i)
    for (size_t j = i; j > 0 && taus[j] < taus[j - 1]; --j) {
      if (model && model->basis[taus[j].second].odd() &&
          model->basis[taus[j - 1].second].odd())
        sign = -sign;
      std::swap(taus[j], taus[j - 1]);
    }
  if (model)
    for (size_t i = 1; i < taus.size(); ++i)
      if (taus[i] == taus[i - 1] && model->basis[taus[i].second].odd()) return 0;
  return sign;
}

GWTable GWTable::parse(std::istream& is) {
  GWTable t;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.find(';') != std::string::npos) {
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string f;
      while (std::getline(ss, f, ';')) fields.push_back(f);
      if (fields.size() != 4) throw std::invalid_argument("bad entry line: " + line);
      GWKey key;
      key.g = std::stoi(trim(fields[0]));
      key.beta = parse_beta(fields[1]);
      key.taus = parse_taus(fields[2]);
      canonical_sign(nullptr, key.taus);
      t.entries[key] = parse_rational(trim(fields[3]));
      continue;
    }
    std::stringstream ss(line);
    std::string word;
    ss >> word;
    if (word == "model") {
      ss >> t.model_ref;
    } else if (word == "degree_rank") {
      ss >> t.degree_rank;
    } else if (word == "bounds") {
      ss >> t.gmax >> t.kmax;
      long n;
      if (ss >> n) t.nmax = n;
    } else if (word == "c1_beta") {
      std::string v;
      while (ss >> v) t.c1_beta.push_back(parse_rational(v));
    } else if (word == "omega_beta") {
      long a;
      ss >> a;
      std::string v;
      std::vector<Rational> func;
      while (ss >> v) func.push_back(parse_rational(v));
      t.omega_beta[a] = func;
    } else if (word == "allow") {
      std::string v;
      ss >> v;
      t.allowed.push_back(parse_beta(v));
    } else {
      throw std::invalid_argument("unknown table header line: " + line);
    }
  }
  return t;
}

std::string GWTable::emit() const {
  std::ostringstream os;
  os << "model " << model_ref << "\n";
  os << "degree_rank " << degree_rank << "\n";
  os << "bounds " << gmax << " " << kmax;
  if (nmax < (1L << 30)) os << " " << nmax;
  os << "\n";
  if (!c1_beta.empty()) {
    os << "c1_beta";
    for (auto& v : c1_beta) os << " " << rat_str(v);
    os << "\n";
  }
  for (auto& [a, func] : omega_beta) {
    os << "omega_beta " << a;
    for (auto& v : func) os << " " << rat_str(v);
    os << "\n";
  }
  for (auto& b : allowed) os << "allow " << beta_str(b) << "\n";
  for (auto& [key, v] : entries)
    os << key.g << " ; " << beta_str(key.beta) << " ; " << taus_str(key.taus)
       << " ; " << rat_str(v) << "\n";
  return os.str();
}

void GWTable::set(const CohModel* model, int g, std::vector<long> beta,
                  std::vector<std::pair<int, long>> taus, const Rational& v) {
  int sign = canonical_sign(model, taus);
  GWKey key{g, std::move(beta), std::move(taus)};
  if (sign == 0 || v == 0)
    entries.erase(key);
  else
    entries[key] = Rational(sign) * v;
}

Rational GWTable::c1_cap(const std::vector<long>& beta) const {
  Rational s = 0;
  for (size_t i = 0; i < beta.size(); ++i)
    s += Rational(beta[i]) * (i < c1_beta.size() ? c1_beta[i] : Rational(0));
  return s;
}

std::optional<Rational> GWTable::omega_cap(long a, const std::vector<long>& beta) const {
  auto it = omega_beta.find(a);
  if (it == omega_beta.end()) return std::nullopt;
  Rational s = 0;
  for (size_t i = 0; i < beta.size(); ++i)
    s += Rational(beta[i]) * (i < it->second.size() ? it->second[i] : Rational(0));
  return s;
}

bool GWTable::degree_declared(const std::vector<long>& beta) const {
  if (all_zero(beta)) return true;
  return std::find(allowed.begin(), allowed.end(), beta) != allowed.end();
}

std::optional<Rational> GWTable::lookup(const CohModel& model, int g,
                                        const std::vector<long>& beta,
                                        std::vector<std::pair<int, long>> taus) const {
  if (g < 0) return Rational(0);
  for (auto& [k, a] : taus)
    if (k < 0) return Rational(0);
  for (long b : beta)
    if (b < 0) return Rational(0);
  int n = (int)taus.size();
  bool deg0 = all_zero(beta);
  if (deg0 && 2 * g - 2 + n <= 0) return Rational(0);
  // dimension filter against the virtual dimension (pure bidegrees)
  Rational lhs = 0;
  long ksum = 0;
  for (auto& [k, a] : taus) {
    lhs += Rational(2 * k + model.basis[a].p + model.basis[a].q);
    ksum += k;
  }
  Rational rhs = 2 * (Rational(3 - model.r) * (g - 1) + c1_cap(beta) + n);
  if (lhs != rhs) return Rational(0);
  if (g > gmax || ksum > kmax || n > nmax || !degree_declared(beta))
    return std::nullopt;
  int sign = canonical_sign(&model, taus);
  if (sign == 0) return Rational(0);
  auto it = entries.find(GWKey{g, beta, taus});
  if (it == entries.end()) return Rational(0);
  return Rational(sign) * it->second;
}

GWTable export_point_table(TauStore& store, int gmax, long kmax) {
  GWTable t;
  t.model_ref = "builtin:point";
  t.degree_rank = 0;
  t.gmax = gmax;
  t.kmax = kmax;
  for (int g = 0; g <= gmax; ++g)
    for (long s = 0; s <= kmax; ++s) {
      long n = s - 3L * g + 3;
      if (n < 1 || 2 * g - 2 + n <= 0) continue;
      // sorted n-tuples of nonnegative levels summing to s: descending parts
      std::vector<int> parts;
      std::function<void(long, long, int)> gen = [&](long rem, long slots, int maxv) {
        if (slots == 0) {
          if (rem != 0) return;
          std::vector<std::pair<int, long>> taus;
          for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            taus.emplace_back(*it, 0);
          Rational v = store.tau(g, std::vector<int>(parts.rbegin(), parts.rend()));
          if (v != 0) t.set(nullptr, g, {}, taus, v);
          return;
        }
        for (int v = std::min<long>(maxv, rem); v >= 0; --v) {
          if ((long)v * slots < rem) break;
          parts.push_back(v);
          gen(rem - v, slots - 1, v);
          parts.pop_back();
        }
      };
      gen(s, n, (int)s);
    }
  return t;
}

GWTable sample_p1_table() {
  GWTable t;
  t.model_ref = "builtin:P1";
  t.degree_rank = 1;
  t.c1_beta = {Rational(2)};
  t.omega_beta[1] = {Rational(1)};
  t.allowed = {{1}};
  t.gmax = 1;
  t.kmax = 1;
  t.nmax = 3;
  auto e = [&](int g, long d, std::vector<std::pair<int, long>> taus,
               const Rational& v) { t.set(nullptr, g, {d}, std::move(taus), v); };
  // constant maps, genus 0: psi integral times a triple product needing one
  // divisor insertion
  e(0, 0, {{0, 0}, {0, 0}, {0, 1}}, 1);
  // constant maps, genus 1: seeds chi/24 and (1/24) int omega c_0, closed up
  // under the string, dilaton and divisor identities
  e(1, 0, {{1, 0}}, Rational(1, 12));
  e(1, 0, {{0, 1}}, Rational(1, 24));
  e(1, 0, {{1, 0}, {0, 1}}, Rational(1, 24));
  e(1, 0, {{1, 1}, {0, 0}}, Rational(1, 24));
  // degree one, genus 0: from the mapping-space series 1/(H+z)^2
  e(0, 1, {{0, 1}}, 1);
  e(0, 1, {{1, 0}}, -2);
  e(0, 1, {{0, 1}, {0, 1}}, 1);
  e(0, 1, {{1, 0}, {0, 1}}, -1);
  e(0, 1, {{1, 1}, {0, 0}}, 1);
  e(0, 1, {{0, 1}, {0, 1}, {0, 1}}, 1);
  e(0, 1, {{1, 1}, {0, 1}, {0, 0}}, 1);
  return t;
}

namespace {

// componentwise splits beta = b1 + b2 with b1, b2 >= 0
std::vector<std::vector<long>> lower_sets(const std::vector<long>& beta) {
  std::vector<std::vector<long>> out{{}};
  for (long b : beta) {
    std::vector<std::vector<long>> next;
    for (auto& pre : out)
      for (long x = 0; x <= b; ++x) {
        auto v = pre;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::optional<Rational> z_residual(const GWTable& table, const CohModel& model,
                                   int k, int g,
                                   const std::vector<std::pair<int, long>>& probe,
                                   const std::vector<long>& beta) {
  if (k < -1 || g < 0) throw std::invalid_argument("k >= -1, g >= 0 required");
  if (!model.is_even() && !probe.empty())
    throw std::invalid_argument("probe derivatives require an even model");
  long dim = model.dim();
  std::vector<RatMatrix> Rp;
  for (int i = 0; i <= k + 2; ++i) Rp.push_back(model.R.pow(i));
  RatMatrix eta_inv = model.eta_inv();
  Rational total = 0;
  bool deg0 = all_zero(beta);
  auto splits = lower_sets(beta);

  auto add = [&](const Rational& coef, int gg, const std::vector<long>& bb,
                 std::vector<std::pair<int, long>> taus) -> bool {
    if (coef == 0) return true;
    auto v = table.lookup(model, gg, bb, std::move(taus));
    if (!v) return false;
    total += coef * *v;
    return true;
  };

  for (int i = 0; i <= k + 1; ++i) {
    // -[(3-r)/2]^k_i (R^i)_0^b <<tau_{k-i+1,b}>>
    Rational br0 = bracket(Rational(3 - model.r, 2), k, i);
    for (long b = 0; b < dim; ++b) {
      auto taus = probe;
      taus.emplace_back(k - i + 1, b);
      if (!add(-br0 * Rp[i].at(0, b), g, beta, std::move(taus))) return std::nullopt;
    }
    // [mu_a+m+1/2]^k_i (R^i)_a^b t_m^a <<tau_{m+k-i,b}>>, one probe slot
    // consumed by the t factor
    for (size_t j = 0; j < probe.size(); ++j) {
      auto [m, a] = probe[j];
      Rational br = bracket(model.mu_entry(a) + m + Rational(1, 2), k, i);
      for (long b = 0; b < dim; ++b) {
        std::vector<std::pair<int, long>> taus;
        for (size_t jj = 0; jj < probe.size(); ++jj)
          if (jj != j) taus.push_back(probe[jj]);
        taus.emplace_back(m + k - i, b);
        if (!add(br * Rp[i].at(a, b), g, beta, std::move(taus))) return std::nullopt;
      }
    }
    // 1/2 (-1)^m [mu_c+m+1/2]^k_i eta^{ca} (R^i)_c^b
    //   ( <<tau_{-m-1,a} tau_{m+k-i,b}>>_{g-1}
    //   + sum_h <<tau_{-m-1,a}>>_h <<tau_{m+k-i,b}>>_{g-h} )
    for (int m = i - k; m <= -1; ++m) {
      Rational sign((m % 2 == 0) ? 1 : -1);
      for (long a = 0; a < dim; ++a)
        for (long b = 0; b < dim; ++b) {
          Rational c = 0;
          for (long cc = 0; cc < dim; ++cc)
            c += bracket(model.mu_entry(cc) + m + Rational(1, 2), k, i) *
                 eta_inv.at(cc, a) * Rp[i].at(cc, b);
          c *= sign / 2;
          if (c == 0) continue;
          {
            auto taus = probe;
            taus.emplace_back(-m - 1, a);
            taus.emplace_back(m + k - i, b);
            if (!add(c, g - 1, beta, std::move(taus))) return std::nullopt;
          }
          for (size_t mask = 0; mask < (size_t(1) << probe.size()); ++mask)
            for (int h = 0; h <= g; ++h)
              for (auto& b1 : splits) {
                std::vector<long> b2(beta.size());
                for (size_t q = 0; q < beta.size(); ++q) b2[q] = beta[q] - b1[q];
                std::vector<std::pair<int, long>> t1{{-m - 1, a}}, t2{{m + k - i, b}};
                for (size_t jj = 0; jj < probe.size(); ++jj)
                  ((mask >> jj) & 1 ? t1 : t2).push_back(probe[jj]);
                auto v1 = table.lookup(model, h, b1, std::move(t1));
                if (!v1) return std::nullopt;
                if (*v1 == 0) continue;
                auto v2 = table.lookup(model, g - h, b2, std::move(t2));
                if (!v2) return std::nullopt;
                total += c * *v1 * *v2;
              }
        }
    }
  }
  // delta_{g,0}/2 (R^{k+1})_{ab} t_0^a t_0^b
  if (g == 0 && deg0 && probe.size() == 2 && probe[0].first == 0 &&
      probe[1].first == 0) {
    RatMatrix low = Rp[k + 1] * model.eta;
    long a = probe[0].second, b = probe[1].second;
    total += (low.at(a, b) + low.at(b, a)) / 2;
  }
  // delta_{k,0} delta_{g,1} rho
  if (k == 0 && g == 1 && deg0 && probe.empty()) total += model.rho();
  return total;
}

namespace {

std::string instance_str(const GWKey& key) {
  return "g=" + std::to_string(key.g) + " beta=" + beta_str(key.beta) + " " +
         taus_str(key.taus);
}

}  // namespace

EqCheckReport puncture_check(const GWTable& table, const CohModel& model) {
  EqCheckReport rep;
  for (auto& [key, val] : table.entries) {
    auto lhs_taus = key.taus;
    lhs_taus.emplace_back(0, 0);
    auto lhs = table.lookup(model, key.g, key.beta, std::move(lhs_taus));
    std::optional<Rational> rhs = Rational(0);
    if (key.g == 0 && all_zero(key.beta) && key.taus.size() == 2 &&
        key.taus[0].first == 0 && key.taus[1].first == 0) {
      rhs = model.eta.at(key.taus[0].second, key.taus[1].second);
    } else {
      for (size_t i = 0; i < key.taus.size() && rhs; ++i) {
        auto red = key.taus;
        red[i].first -= 1;
        auto v = table.lookup(model, key.g, key.beta, std::move(red));
        if (!v)
          rhs = std::nullopt;
        else
          *rhs += *v;
      }
    }
    if (!lhs || !rhs) {
      rep.skipped++;
      continue;
    }
    rep.checked++;
    if (*lhs != *rhs)
      rep.failures.push_back(instance_str(key) + ": " + rat_str(*lhs) +
                             " != " + rat_str(*rhs));
  }
  // degree-zero three-point values against the pairing
  std::vector<long> zero_beta(table.degree_rank, 0);
  for (long a = 0; a < model.dim(); ++a)
    for (long b = a; b < model.dim(); ++b) {
      auto lhs = table.lookup(model, 0, zero_beta, {{0, 0}, {0, a}, {0, b}});
      if (!lhs) {
        rep.skipped++;
        continue;
      }
      rep.checked++;
      if (*lhs != model.eta.at(a, b))
        rep.failures.push_back("<tau_{0,0}tau_{0," + std::to_string(a) +
                               "}tau_{0," + std::to_string(b) + "}>_0: " +
                               rat_str(*lhs) + " != " +
                               rat_str(model.eta.at(a, b)));
    }
  return rep;
}

EqCheckReport dilaton_check(const GWTable& table, const CohModel& model) {
  EqCheckReport rep;
  for (auto& [key, val] : table.entries) {
    auto lhs_taus = key.taus;
    lhs_taus.emplace_back(1, 0);
    auto lhs = table.lookup(model, key.g, key.beta, std::move(lhs_taus));
    auto base = table.lookup(model, key.g, key.beta, key.taus);
    if (!lhs || !base) {
      rep.skipped++;
      continue;
    }
    Rational rhs = Rational(2 * key.g - 2 + (long)key.taus.size()) * *base;
    rep.checked++;
    if (*lhs != rhs)
      rep.failures.push_back(instance_str(key) + ": " + rat_str(*lhs) +
                             " != " + rat_str(rhs));
  }
  // the degree-zero exceptional value <tau_{1,0}>_1 = chi/24
  auto exc = table.lookup(model, 1, std::vector<long>(table.degree_rank, 0),
                          {{1, 0}});
  if (exc) {
    rep.checked++;
    if (*exc != model.chern_cr / 24)
      rep.failures.push_back("<tau_{1,0}>_1: " + rat_str(*exc) +
                             " != " + rat_str(model.chern_cr / 24));
  } else {
    rep.skipped++;
  }
  return rep;
}

EqCheckReport divisor_check(const GWTable& table, const CohModel& model, long omega) {
  EqCheckReport rep;
  if (omega < 0 || omega >= model.dim() ||
      model.basis[omega].p + model.basis[omega].q != 2)
    throw std::invalid_argument("omega must index a divisor class");
  // only classes proportional to c_1 carry a multiplication matrix here
  Rational lambda = model.R.at(0, omega);
  for (long b = 0; b < model.dim(); ++b)
    if (b != omega && model.R.at(0, b) != 0)
      throw std::invalid_argument("c_1 is not proportional to the given class");
  if (lambda == 0) throw std::invalid_argument("degenerate divisor class");
  RatMatrix Rw = (1 / lambda) * model.R;
  std::vector<long> zero_beta(table.degree_rank, 0);

  for (auto& [key, val] : table.entries) {
    auto cap = table.omega_cap(omega, key.beta);
    if (!cap) {
      rep.skipped++;
      continue;
    }
    auto lhs_taus = key.taus;
    lhs_taus.emplace_back(0, omega);
    auto lhs = table.lookup(model, key.g, key.beta, std::move(lhs_taus));
    std::optional<Rational> rhs;
    if (key.g == 0 && all_zero(key.beta) && key.taus.size() == 2 &&
        key.taus[0].first == 0 && key.taus[1].first == 0) {
      rhs = (Rw * model.eta).at(key.taus[0].second, key.taus[1].second);
    } else {
      auto base = table.lookup(model, key.g, key.beta, key.taus);
      if (base) {
        rhs = *cap * *base;
        for (size_t i = 0; i < key.taus.size() && rhs; ++i)
          for (long b = 0; b < model.dim() && rhs; ++b) {
            Rational c = Rw.at(key.taus[i].second, b);
            if (c == 0) continue;
            auto red = key.taus;
            red[i] = {red[i].first - 1, b};
            auto v = table.lookup(model, key.g, key.beta, std::move(red));
            if (!v)
              rhs = std::nullopt;
            else
              *rhs += c * *v;
          }
      }
    }
    if (!lhs || !rhs) {
      rep.skipped++;
      continue;
    }
    rep.checked++;
    if (*lhs != *rhs)
      rep.failures.push_back(instance_str(key) + ": " + rat_str(*lhs) +
                             " != " + rat_str(*rhs));
  }
  // degree-zero three-point values against the pairing lowered through omega
  RatMatrix low = Rw * model.eta;
  for (long a = 0; a < model.dim(); ++a)
    for (long b = a; b < model.dim(); ++b) {
      auto lhs = table.lookup(model, 0, zero_beta, {{0, omega}, {0, a}, {0, b}});
      if (!lhs) {
        rep.skipped++;
        continue;
      }
      rep.checked++;
      Rational want = (low.at(a, b) + low.at(b, a)) / 2;
      if (*lhs != want)
        rep.failures.push_back("<tau_0(omega)tau_{0," + std::to_string(a) +
                               "}tau_{0," + std::to_string(b) + "}>_0: " +
                               rat_str(*lhs) + " != " + rat_str(want));
    }
  // the degree-zero exceptional value <tau_0(omega)>_1 = (1/24) int omega c_{r-1}
  auto exc = table.lookup(model, 1, zero_beta, {{0, omega}});
  if (exc) {
    rep.checked++;
    Rational want = model.chern_c1crm1 / (24 * lambda);
    if (*exc != want)
      rep.failures.push_back("<tau_0(omega)>_1: " + rat_str(*exc) +
                             " != " + rat_str(want));
  } else {
    rep.skipped++;
  }
  return rep;
}

}  // namespace gwvir
