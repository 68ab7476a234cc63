#include "gwvir/diffalg.hpp"

#include <algorithm>
#include <sstream>

namespace gwvir {

DiffPoly DiffPoly::constant(const Rational& c) {
  DiffPoly p;
  p.add_term({}, c);
  return p;
}

DiffPoly DiffPoly::hbar(int power) {
  DiffPoly p;
  p.add_term({power, {}}, 1);
  return p;
}

DiffPoly DiffPoly::jet(int i) {
  DiffPoly p;
  p.add_term({0, {i}}, 1);
  return p;
}

void DiffPoly::add_term(const DiffMon& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Rational DiffPoly::coeff(const DiffMon& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r = a;
  return r += b;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r = a;
  return r -= b;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (auto& [m, c] : a.t_)
    for (auto& [n, d] : b.t_) {
      DiffMon p;
      p.hbar = m.hbar + n.hbar;
      p.jets.reserve(m.jets.size() + n.jets.size());
      std::merge(m.jets.begin(), m.jets.end(), n.jets.begin(), n.jets.end(),
                 std::back_inserter(p.jets), std::greater<int>());
      r.add_term(p, c * d);
    }
  return r;
}

DiffPoly operator*(const Rational& s, const DiffPoly& p) {
  DiffPoly r;
  for (auto& [m, c] : p.t_) r.add_term(m, s * c);
  return r;
}

DiffPoly DiffPoly::derive() const {
  DiffPoly r;
  for (auto& [m, c] : t_) {
    for (size_t j = 0; j < m.jets.size(); ++j) {
      DiffMon n = m;
      n.jets[j] += 1;
      std::sort(n.jets.begin(), n.jets.end(), std::greater<int>());
      r.add_term(n, c);
    }
  }
  return r;
}

DiffPoly DiffPoly::derive(int n) const {
  DiffPoly r = *this;
  for (int i = 0; i < n; ++i) r = r.derive();
  return r;
}

DiffPoly DiffPoly::partial(int i) const {
  DiffPoly r;
  for (auto& [m, c] : t_) {
    long mult = std::count(m.jets.begin(), m.jets.end(), i);
    if (mult == 0) continue;
    DiffMon n = m;
    n.jets.erase(std::find(n.jets.begin(), n.jets.end(), i));
    r.add_term(n, c * mult);
  }
  return r;
}

int DiffPoly::max_jet() const {
  int mx = -1;
  for (auto& [m, c] : t_)
    for (int j : m.jets) mx = std::max(mx, j);
  return mx;
}

std::optional<DiffPoly> DiffPoly::integrate() const {
  DiffPoly p = *this, q;
  while (!p.is_zero()) {
    int N = p.max_jet();
    // a total derivative always has its top jet generator, of order >= 1,
    // appearing linearly
    if (N <= 0) return std::nullopt;
    DiffPoly A;
    for (auto& [m, c] : p.terms()) {
      long mult = std::count(m.jets.begin(), m.jets.end(), N);
      if (mult == 0) continue;
      if (mult > 1) return std::nullopt;
      DiffMon n = m;
      n.jets.erase(std::find(n.jets.begin(), n.jets.end(), N));
      A.add_term(n, c);
    }
    // piece of the antiderivative whose derivative reproduces A * u^(N)
    DiffPoly qn;
    for (auto& [m, c] : A.terms()) {
      long mult = std::count(m.jets.begin(), m.jets.end(), N - 1);
      DiffMon n = m;
      n.jets.push_back(N - 1);
      std::sort(n.jets.begin(), n.jets.end(), std::greater<int>());
      qn.add_term(n, c / (mult + 1));
    }
    q += qn;
    p -= qn.derive();
    if (p.max_jet() >= N) return std::nullopt;  // defensive, should not happen
  }
  return q;
}

DiffPoly DiffPoly::variational_derivative() const {
  DiffPoly r;
  int mx = max_jet();
  for (int i = 0; i <= mx; ++i) {
    DiffPoly d = partial(i).derive(i);
    if (i % 2 == 0)
      r += d;
    else
      r -= d;
  }
  return r;
}

std::string DiffPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (c != 1 || (m.hbar == 0 && m.jets.empty())) {
      os << c;
      printed = true;
    }
    if (m.hbar > 0) {
      if (printed) os << "*";
      os << "hbar";
      if (m.hbar > 1) os << "^" << m.hbar;
      printed = true;
    }
    for (int j : m.jets) {
      if (printed) os << "*";
      if (j == 0)
        os << "u";
      else
        os << "u^(" << j << ")";
      printed = true;
    }
  }
  return os.str();
}

}  // namespace gwvir
