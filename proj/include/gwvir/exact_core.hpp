#pragma once
// Exact rational scalars, Laurent polynomials in hbar, small dense rational
// matrices, and the half-integer product symbols used throughout.

#include <boost/multiprecision/gmp.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwvir {

using Rational = boost::multiprecision::mpq_rational;

Rational parse_rational(const std::string& s);
std::string rat_str(const Rational& r);  // "p/q", or "p" when q == 1

Rational factorial(long n);
Rational binomial(long n, long k);

// coefficients of (s+x)(s+x+1)...(s+x+k) as a polynomial in s, degree k+1,
// index = power of s.  k == -1 gives the empty product {1}.
std::vector<Rational> rising_product_coeffs(const Rational& x, int k);

// [x]^k_i: elementary symmetric e_{k+1-i}(x, x+1, ..., x+k)
Rational bracket(const Rational& x, int k, int i);

// prod_{j=0}^{k} (m + 1/2 + j), empty for k == -1
Rational half_product(long m, int k);

// (-1)^m * half_product(m, k)
Rational signed_gamma_ratio(long m, int k);

// Laurent polynomial in hbar with rational coefficients
class HbarLaurent {
 public:
  HbarLaurent() = default;
  explicit HbarLaurent(const Rational& c, int power = 0);

  static HbarLaurent one() { return HbarLaurent(Rational(1)); }

  const std::map<int, Rational>& coeffs() const { return c_; }
  Rational coeff(int power) const;
  void set(int power, const Rational& v);
  void add(int power, const Rational& v);

  bool is_zero() const { return c_.empty(); }
  int min_power() const;  // throws on zero
  int max_power() const;

  HbarLaurent& operator+=(const HbarLaurent& o);
  HbarLaurent& operator-=(const HbarLaurent& o);
  friend HbarLaurent operator+(HbarLaurent a, const HbarLaurent& b) { return a += b; }
  friend HbarLaurent operator-(HbarLaurent a, const HbarLaurent& b) { return a -= b; }
  friend HbarLaurent operator*(const HbarLaurent& a, const HbarLaurent& b);
  HbarLaurent& operator*=(const Rational& s);
  friend bool operator==(const HbarLaurent& a, const HbarLaurent& b) { return a.c_ == b.c_; }

  std::string str() const;  // e.g. "1/2*hbar^-1 + 3 + 2*hbar"

 private:
  std::map<int, Rational> c_;  // power -> coefficient, no zero entries
  void prune(int power);
};

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static RatMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Rational& at(long i, long j) { return e_[i * cols_ + j]; }
  const Rational& at(long i, long j) const { return e_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  RatMatrix transpose() const;
  RatMatrix inverse() const;  // throws std::domain_error if singular
  Rational trace() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  RatMatrix& operator+=(const RatMatrix& o) { return *this = *this + o; }
  RatMatrix& operator-=(const RatMatrix& o) { return *this = *this - o; }
  friend RatMatrix operator*(const Rational& s, RatMatrix m);

  RatMatrix pow(int n) const;  // n >= 0, square only

 private:
  long rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace gwvir
