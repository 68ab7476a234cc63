#include "gwvir/exact_core.hpp"

#include <sstream>

namespace gwvir {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(boost::multiprecision::mpz_int(s));
    }
    boost::multiprecision::mpz_int num(s.substr(0, slash));
    boost::multiprecision::mpz_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Rational r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<Rational> rising_product_coeffs(const Rational& x, int k) {
  if (k < -1) throw std::invalid_argument("rising product needs k >= -1");
  std::vector<Rational> c{Rational(1)};
  for (int j = 0; j <= k; ++j) {
    // multiply by (s + x + j)
    std::vector<Rational> n(c.size() + 1);
    Rational root = x + j;
    for (size_t i = 0; i < c.size(); ++i) {
      n[i] += c[i] * root;
      n[i + 1] += c[i];
    }
    c = std::move(n);
  }
  return c;
}

Rational bracket(const Rational& x, int k, int i) {
  if (i < 0 || i > k + 1) throw std::invalid_argument("bracket index out of range");
  return rising_product_coeffs(x, k)[i];
}

Rational half_product(long m, int k) {
  if (k < -1) throw std::invalid_argument("half_product needs k >= -1");
  Rational r = 1;
  for (int j = 0; j <= k; ++j) r *= Rational(2 * m + 1 + 2 * j) / 2;
  return r;
}

Rational signed_gamma_ratio(long m, int k) {
  Rational r = half_product(m, k);
  return (m % 2 == 0) ? r : -r;
}

// HbarLaurent

HbarLaurent::HbarLaurent(const Rational& c, int power) {
  if (c != 0) c_[power] = c;
}

Rational HbarLaurent::coeff(int power) const {
  auto it = c_.find(power);
  return it == c_.end() ? Rational(0) : it->second;
}

void HbarLaurent::set(int power, const Rational& v) {
  if (v == 0)
    c_.erase(power);
  else
    c_[power] = v;
}

void HbarLaurent::add(int power, const Rational& v) {
  c_[power] += v;
  prune(power);
}

void HbarLaurent::prune(int power) {
  auto it = c_.find(power);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

int HbarLaurent::min_power() const {
  if (c_.empty()) throw std::domain_error("min_power of zero");
  return c_.begin()->first;
}

int HbarLaurent::max_power() const {
  if (c_.empty()) throw std::domain_error("max_power of zero");
  return c_.rbegin()->first;
}

HbarLaurent& HbarLaurent::operator+=(const HbarLaurent& o) {
  for (auto& [p, v] : o.c_) add(p, v);
  return *this;
}

HbarLaurent& HbarLaurent::operator-=(const HbarLaurent& o) {
  for (auto& [p, v] : o.c_) add(p, -v);
  return *this;
}

HbarLaurent operator*(const HbarLaurent& a, const HbarLaurent& b) {
  HbarLaurent r;
  for (auto& [p, v] : a.c_)
    for (auto& [q, w] : b.c_) r.add(p + q, v * w);
  return r;
}

HbarLaurent& HbarLaurent::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [p, v] : c_) v *= s;
  return *this;
}

std::string HbarLaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, v] : c_) {
    if (!first) os << " + ";
    first = false;
    if (p == 0) {
      os << v;
      continue;
    }
    if (v != 1) os << v << "*";
    os << "hbar";
    if (p != 1) os << "^" << p;
  }
  return os.str();
}

// RatMatrix

RatMatrix RatMatrix::identity(long n) {
  RatMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (auto& x : e_)
    if (x != 0) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational RatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square");
  Rational t = 0;
  for (long i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  RatMatrix r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  RatMatrix r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (long i = 0; i < a.rows_; ++i)
    for (long l = 0; l < a.cols_; ++l) {
      const Rational& v = a.at(i, l);
      if (v == 0) continue;
      for (long j = 0; j < b.cols_; ++j) r.at(i, j) += v * b.at(l, j);
    }
  return r;
}

RatMatrix operator*(const Rational& s, RatMatrix m) {
  for (auto& x : m.e_) x *= s;
  return m;
}

RatMatrix RatMatrix::pow(int n) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square");
  if (n < 0) throw std::invalid_argument("negative power");
  RatMatrix r = identity(rows_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
  long n = rows_;
  RatMatrix a = *this, inv = identity(n);
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col)
      for (long j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rational d = a.at(col, col);
    for (long j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (long r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = a.at(r, col);
      if (f == 0) continue;
      for (long j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace gwvir
