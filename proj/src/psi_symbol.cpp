#include "gwvir/psi_symbol.hpp"

namespace gwvir {

MatPoly MatPoly::constant(const RatMatrix& m) {
  MatPoly p(m.rows());
  p.set_coeff(0, m);
  return p;
}

MatPoly MatPoly::variable(long dim) {
  MatPoly p(dim);
  p.set_coeff(1, RatMatrix::identity(dim));
  return p;
}

RatMatrix MatPoly::coeff(int j) const {
  if (j < 0 || j >= (int)c_.size()) return RatMatrix(dim_, dim_);
  return c_[j];
}

void MatPoly::set_coeff(int j, const RatMatrix& m) {
  if (j < 0) throw std::invalid_argument("negative degree");
  while ((int)c_.size() <= j) c_.emplace_back(dim_, dim_);
  c_[j] = m;
  trim();
}

void MatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatMatrix MatPoly::eval(const Rational& x) const {
  RatMatrix r(dim_, dim_);
  Rational p = 1;
  for (auto& m : c_) {
    r += p * m;
    p *= x;
  }
  return r;
}

MatPoly MatPoly::shifted(const Rational& s) const {
  // f(D + s): expand each (D+s)^j
  MatPoly r(dim_);
  for (int j = 0; j < (int)c_.size(); ++j) {
    // binomial expansion
    Rational pw = 1;
    for (int i = j; i >= 0; --i) {
      // coefficient of D^i in (D+s)^j is C(j,i) s^{j-i}
      RatMatrix add = (binomial(j, i) * pw) * c_[j];
      while ((int)r.c_.size() <= i) r.c_.emplace_back(dim_, dim_);
      r.c_[i] += add;
      pw *= s;
    }
  }
  r.trim();
  return r;
}

MatPoly MatPoly::negated_argument() const {
  MatPoly r = *this;
  for (int j = 1; j < (int)r.c_.size(); j += 2) r.c_[j] = Rational(-1) * r.c_[j];
  return r;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
  MatPoly r(a.dim_ ? a.dim_ : b.dim_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), RatMatrix(r.dim_, r.dim_));
  for (size_t j = 0; j < r.c_.size(); ++j) {
    if (j < a.c_.size()) r.c_[j] += a.c_[j];
    if (j < b.c_.size()) r.c_[j] += b.c_[j];
  }
  r.trim();
  return r;
}

MatPoly operator-(const MatPoly& a, const MatPoly& b) { return a + (Rational(-1) * b); }

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  MatPoly r(a.dim_);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, RatMatrix(a.dim_, a.dim_));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

MatPoly operator*(const Rational& s, const MatPoly& p) {
  MatPoly r = p;
  for (auto& m : r.c_) m = s * m;
  r.trim();
  return r;
}

bool MatPoly::operator==(const MatPoly& o) const {
  MatPoly d = *this - o;
  return d.is_zero();
}

// PsiSymbol

PsiSymbol PsiSymbol::del(long dim, int k) {
  PsiSymbol s(dim);
  s.add_component(k, MatPoly::constant(RatMatrix::identity(dim)));
  return s;
}

PsiSymbol PsiSymbol::term(const MatPoly& f, int k) {
  PsiSymbol s(f.dim());
  s.add_component(k, f);
  return s;
}

void PsiSymbol::add_component(int k, const MatPoly& f) {
  if (f.is_zero()) return;
  auto it = comp_.find(k);
  if (it == comp_.end()) {
    comp_.emplace(k, f);
  } else {
    it->second = it->second + f;
    if (it->second.is_zero()) comp_.erase(it);
  }
}

PsiSymbol operator+(const PsiSymbol& a, const PsiSymbol& b) {
  PsiSymbol r = a;
  for (auto& [k, f] : b.comp_) r.add_component(k, f);
  return r;
}

PsiSymbol operator-(const PsiSymbol& a, const PsiSymbol& b) {
  return a + (Rational(-1) * b);
}

PsiSymbol operator*(const Rational& s, const PsiSymbol& p) {
  PsiSymbol r(p.dim());
  if (s == 0) return r;
  for (auto& [k, f] : p.comp_) r.add_component(k, s * f);
  return r;
}

bool PsiSymbol::operator==(const PsiSymbol& o) const { return (*this - o).is_zero(); }

namespace {

// product with the matrix coefficients composed in reverse: symbols act on the
// free field on the component index from the right, so applying a after b
// multiplies matrices as g f
MatPoly mul_matrev(const MatPoly& f, const MatPoly& g) {
  MatPoly r(f.dim());
  for (int i = 0; i <= f.degree(); ++i)
    for (int j = 0; j <= g.degree(); ++j) {
      RatMatrix add = g.coeff(j) * f.coeff(i);
      if (!add.is_zero()) r.set_coeff(i + j, r.coeff(i + j) + add);
    }
  return r;
}

}  // namespace

PsiSymbol psi_mul(const PsiSymbol& a, const PsiSymbol& b) {
  PsiSymbol r(a.dim());
  for (auto& [k, f] : a.components())
    for (auto& [l, g] : b.components()) r.add_component(k + l, mul_matrev(f, g.shifted(k)));
  return r;
}

PsiSymbol psi_commutator(const PsiSymbol& a, const PsiSymbol& b) {
  return psi_mul(a, b) - psi_mul(b, a);
}

PsiSymbol symbol_Lk(const CohModel& model, int k, const Rational& s) {
  if (k < -1) throw std::invalid_argument("k >= -1 required");
  long n = model.dim();
  // B = (D + mu) del^-1 + R
  PsiSymbol B(n);
  B.add_component(-1, MatPoly::variable(n) + MatPoly::constant(model.mu(s)));
  B.add_component(0, MatPoly::constant(model.R));
  PsiSymbol acc = PsiSymbol::del(n, 0);  // identity
  for (int i = 0; i <= k; ++i) acc = psi_mul(acc, B);
  return Rational(-1) * psi_mul(acc, PsiSymbol::del(n, 1));
}

Rational cocycle(const CohModel& model, const PsiSymbol& a, const PsiSymbol& b) {
  Rational total = 0;
  for (auto& [k, f] : a.components()) {
    auto it = b.components().find(-k);
    if (it == b.components().end()) continue;
    const MatPoly& g = it->second;
    Rational part = 0;
    for (int m = 0; m <= k - 1; ++m)
      part += model.str(f.eval(Rational(2 * (m - k) + 1, 2)) * g.eval(Rational(2 * m + 1, 2)));
    for (int m = 0; m <= -k - 1; ++m)
      part -= model.str(f.eval(Rational(2 * m + 1, 2)) * g.eval(Rational(2 * (m - k) + 1, 2)));
    total += part / 2;
  }
  return total;
}

bool parity_normal_form_check(const CohModel& model, const PsiSymbol& s) {
  RatMatrix eta_inv = model.eta_inv();
  for (auto& [k, f] : s.components()) {
    // adjoint coefficientwise: F* = eta F' eta^{-1}
    MatPoly fstar(f.dim());
    for (int j = 0; j <= f.degree(); ++j)
      fstar.set_coeff(j, model.eta * f.coeff(j).transpose() * eta_inv);
    MatPoly rhs = fstar.shifted(Rational(-k));
    if (k % 2 == 0) rhs = Rational(-1) * rhs;
    if (!(f.negated_argument() == rhs)) return false;
  }
  return true;
}

}  // namespace gwvir
