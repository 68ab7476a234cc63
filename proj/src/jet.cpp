#include "gwvir/jet.hpp"

#include <algorithm>
#include <sstream>

namespace gwvir {

JetMon JetMon::merged(const JetMon& a, const JetMon& b) {
  JetMon m;
  m.vars.reserve(a.vars.size() + b.vars.size());
  std::merge(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
             std::back_inserter(m.vars));
  return m;
}

std::string JetMon::str() const {
  if (vars.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < vars.size(); ++i) os << (i ? "*" : "") << "t" << vars[i];
  return os.str();
}

Jet Jet::monomial(const JetMon& m, const Rational& c, int var_cut, int hbar_power) {
  Jet j(kInfDeg, var_cut, hbar_power, kInfDeg);
  j.add_term(m, hbar_power, c);
  return j;
}

Jet Jet::constant(const Rational& c, int var_cut) {
  return monomial(JetMon{}, c, var_cut, 0);
}

bool Jet::in_window(const JetMon& m) const {
  if (m.degree() > deg_cut_) return false;
  return m.vars.empty() || m.vars.back() <= var_cut_;
}

void Jet::add_term(const JetMon& m, int hbar_power, const Rational& c) {
  if (c == 0 || !in_window(m) || hbar_power > trust_) return;
  if (hbar_power < floor_) throw std::logic_error("jet coefficient below hbar floor");
  auto& h = c_[m];
  h.add(hbar_power, c);
  if (h.is_zero()) c_.erase(m);
}

Rational Jet::coeff(const JetMon& m, int hbar_power) const {
  auto it = c_.find(m);
  return it == c_.end() ? Rational(0) : it->second.coeff(hbar_power);
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r(std::min(a.deg_cut_, b.deg_cut_), std::min(a.var_cut_, b.var_cut_),
        std::min(a.floor_, b.floor_), std::min(a.trust_, b.trust_));
  for (auto& [m, h] : a.c_)
    for (auto& [p, v] : h.coeffs()) r.add_term(m, p, v);
  for (auto& [m, h] : b.c_)
    for (auto& [p, v] : h.coeffs()) r.add_term(m, p, v);
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet nb = Rational(-1) * b;
  return a + nb;
}

Jet operator*(const Jet& a, const Jet& b) {
  long trust = std::min((long)a.trust_ + b.floor_, (long)b.trust_ + a.floor_);
  trust = std::min(trust, (long)Jet::kInfDeg);
  Jet r(std::min(a.deg_cut_, b.deg_cut_), std::min(a.var_cut_, b.var_cut_),
        a.floor_ + b.floor_, (int)trust);
  for (auto& [m, h] : a.c_)
    for (auto& [n, k] : b.c_) {
      JetMon mn = JetMon::merged(m, n);
      if (!r.in_window(mn)) continue;
      for (auto& [p, v] : h.coeffs())
        for (auto& [q, w] : k.coeffs()) r.add_term(mn, p + q, v * w);
    }
  return r;
}

Jet operator*(const Rational& s, Jet j) {
  if (s == 0) {
    j.c_.clear();
    return j;
  }
  for (auto& [m, h] : j.c_) h *= s;
  return j;
}

Jet Jet::times_hbar(int power) const {
  Jet r(deg_cut_, var_cut_, floor_ + power, trust_ >= kInfDeg ? kInfDeg : trust_ + power);
  for (auto& [m, h] : c_)
    for (auto& [p, v] : h.coeffs()) r.add_term(m, p + power, v);
  return r;
}

Jet Jet::d(int var) const {
  Jet r(deg_cut_ == kInfDeg ? kInfDeg : deg_cut_ - 1, var_cut_, floor_, trust_);
  for (auto& [m, h] : c_) {
    long mult = std::count(m.vars.begin(), m.vars.end(), var);
    if (mult == 0) continue;
    JetMon n = m;
    n.vars.erase(std::find(n.vars.begin(), n.vars.end(), var));
    for (auto& [p, v] : h.coeffs()) r.add_term(n, p, v * mult);
  }
  return r;
}

std::string Jet::witness() const {
  if (c_.empty()) return "";
  auto& [m, h] = *c_.begin();
  std::ostringstream os;
  os << m.str() << " : " << h.str();
  return os.str();
}

Jet eval_diffpoly(const DiffPoly& p, const std::vector<Jet>& jets, int hbar_trust_bound) {
  if (jets.empty()) throw std::invalid_argument("need at least u^(0)");
  int var_cut = jets[0].var_cut();
  int deg = jets[0].deg_cut();
  for (auto& j : jets) {
    var_cut = std::min(var_cut, j.var_cut());
    deg = std::min(deg, j.deg_cut());
  }
  Jet acc(deg, var_cut, 0, hbar_trust_bound);
  for (auto& [m, c] : p.terms()) {
    if (m.hbar > hbar_trust_bound) continue;
    Jet term = Jet::constant(c, var_cut).times_hbar(m.hbar);
    for (int i : m.jets) {
      if (i >= (int)jets.size())
        throw std::invalid_argument("missing jet of order " + std::to_string(i));
      term = term * jets[i];
    }
    acc += term;
  }
  return acc;
}

}  // namespace gwvir
