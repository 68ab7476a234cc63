#include "gwvir/coh_model.hpp"

#include <istream>
#include <sstream>

namespace gwvir {

bool CohModel::is_even() const {
  for (auto& b : basis)
    if (b.odd()) return false;
  return true;
}

CohModel CohModel::point() {
  CohModel m;
  m.r = 0;
  m.basis = {{"1", 0, 0}};
  m.eta = RatMatrix(1, 1);
  m.eta.at(0, 0) = 1;
  m.R = RatMatrix(1, 1);
  m.chern_cr = 1;
  m.chern_c1crm1 = 0;
  return m;
}

CohModel CohModel::projective_space(int r) {
  if (r < 1 || r > 4) throw std::invalid_argument("projective space built-ins cover r in 1..4");
  CohModel m;
  m.r = r;
  for (int a = 0; a <= r; ++a) {
    std::string label = a == 0 ? "1" : (a == 1 ? "H" : "H^" + std::to_string(a));
    m.basis.push_back({label, a, a});
  }
  long n = r + 1;
  m.eta = RatMatrix(n, n);
  for (int a = 0; a <= r; ++a) m.eta.at(a, r - a) = 1;
  m.R = RatMatrix(n, n);
  for (int a = 0; a < r; ++a) m.R.at(a, a + 1) = r + 1;  // c_1 = (r+1)H
  m.chern_cr = r + 1;
  m.chern_c1crm1 = Rational((r + 1) * (r + 1)) * r / 2;
  return m;
}

CohModel CohModel::genus2_curve() {
  CohModel m;
  m.r = 1;
  m.basis = {{"1", 0, 0}, {"pt", 1, 1}, {"a1", 1, 0}, {"a2", 1, 0}, {"b1", 0, 1}, {"b2", 0, 1}};
  long n = 6;
  m.eta = RatMatrix(n, n);
  m.eta.at(0, 1) = 1;
  m.eta.at(1, 0) = 1;
  // symplectic pairing on H^1, graded antisymmetric
  m.eta.at(2, 4) = 1;
  m.eta.at(4, 2) = -1;
  m.eta.at(3, 5) = 1;
  m.eta.at(5, 3) = -1;
  m.R = RatMatrix(n, n);
  m.R.at(0, 1) = -2;  // c_1 = (2-2g) pt
  m.chern_cr = -2;
  m.chern_c1crm1 = -2;  // c_0 = 1
  return m;
}

CohModel CohModel::product(const CohModel& A, const CohModel& B) {
  if (!A.is_even() || !B.is_even())
    throw std::invalid_argument("product constructor requires even factors");
  CohModel m;
  m.r = A.r + B.r;
  long na = A.dim(), nb = B.dim(), n = na * nb;
  auto id = [&](long i, long j) { return i * nb + j; };
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j)
      m.basis.push_back({A.basis[i].label + "*" + B.basis[j].label,
                         A.basis[i].p + B.basis[j].p, A.basis[i].q + B.basis[j].q});
  m.eta = RatMatrix(n, n);
  m.R = RatMatrix(n, n);
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j)
      for (long k = 0; k < na; ++k)
        for (long l = 0; l < nb; ++l) {
          m.eta.at(id(i, j), id(k, l)) = A.eta.at(i, k) * B.eta.at(j, l);
          Rational rv = 0;
          if (j == l) rv += A.R.at(i, k);
          if (i == k) rv += B.R.at(j, l);
          m.R.at(id(i, j), id(k, l)) = rv;
        }
  m.chern_cr = A.chern_cr * B.chern_cr;
  m.chern_c1crm1 = A.chern_c1crm1 * B.chern_cr + A.chern_cr * B.chern_c1crm1;
  return m;
}

CohModel CohModel::builtin(const std::string& name) {
  auto x = name.find('x');
  if (x != std::string::npos)
    return product(builtin(name.substr(0, x)), builtin(name.substr(x + 1)));
  if (name == "point") return point();
  if (name == "genus2") return genus2_curve();
  if (name.size() == 2 && name[0] == 'P' && name[1] >= '1' && name[1] <= '4')
    return projective_space(name[1] - '0');
  throw std::invalid_argument("unknown builtin model: " + name);
}

CohModel CohModel::parse(std::istream& is) {
  CohModel m;
  m.r = -1;
  std::vector<std::tuple<long, long, Rational>> etas, c1s;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "dim") {
      if (!(ls >> m.r) || m.r < 0) fail("bad dimension");
    } else if (kw == "basis") {
      BasisClass b;
      if (!(ls >> b.label >> b.p >> b.q)) fail("bad basis line");
      m.basis.push_back(b);
    } else if (kw == "eta" || kw == "c1") {
      long i, j;
      std::string v;
      if (!(ls >> i >> j >> v)) fail("bad " + kw + " line");
      (kw == "eta" ? etas : c1s).emplace_back(i, j, parse_rational(v));
    } else if (kw == "chern") {
      std::string which, v;
      if (!(ls >> which >> v)) fail("bad chern line");
      if (which == "cr")
        m.chern_cr = parse_rational(v);
      else if (which == "c1crm1")
        m.chern_c1crm1 = parse_rational(v);
      else
        fail("unknown chern integral " + which);
    } else {
      fail("unknown keyword " + kw);
    }
  }
  lineno = 0;
  if (m.r < 0) throw std::invalid_argument("missing dim");
  if (m.basis.empty()) throw std::invalid_argument("missing basis");
  long n = m.dim();
  m.eta = RatMatrix(n, n);
  m.R = RatMatrix(n, n);
  for (auto& [i, j, v] : etas) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("eta index out of range");
    m.eta.at(i, j) = v;
  }
  for (auto& [i, j, v] : c1s) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("c1 index out of range");
    m.R.at(i, j) = v;
  }
  return m;
}

std::string CohModel::emit() const {
  std::ostringstream os;
  os << "dim " << r << "\n";
  for (auto& b : basis) os << "basis " << b.label << " " << b.p << " " << b.q << "\n";
  for (long i = 0; i < dim(); ++i)
    for (long j = 0; j < dim(); ++j)
      if (eta.at(i, j) != 0) os << "eta " << i << " " << j << " " << rat_str(eta.at(i, j)) << "\n";
  for (long i = 0; i < dim(); ++i)
    for (long j = 0; j < dim(); ++j)
      if (R.at(i, j) != 0) os << "c1 " << i << " " << j << " " << rat_str(R.at(i, j)) << "\n";
  os << "chern cr " << rat_str(chern_cr) << "\n";
  os << "chern c1crm1 " << rat_str(chern_c1crm1) << "\n";
  return os.str();
}

std::vector<std::string> CohModel::validate() const {
  std::vector<std::string> bad;
  long n = dim();
  if (n == 0) return {"empty basis"};
  if (basis[0].p != 0 || basis[0].q != 0) bad.push_back("class 0 is not the identity bidegree");
  if (eta.rows() != n || eta.cols() != n || R.rows() != n || R.cols() != n)
    bad.push_back("matrix shape mismatch");
  // graded symmetry of the pairing
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      Rational sign = (basis[a].odd() && basis[b].odd()) ? -1 : 1;
      if (eta.at(a, b) != sign * eta.at(b, a)) {
        bad.push_back("pairing not graded symmetric");
        goto sym_done;
      }
    }
sym_done:
  try {
    eta.inverse();
  } catch (const std::domain_error&) {
    bad.push_back("pairing degenerate");
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (eta.at(a, b) != 0 && (basis[a].p + basis[b].p != r || basis[a].q + basis[b].q != r)) {
        bad.push_back("pairing violates Poincare degree");
        goto deg_done;
      }
deg_done:
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (R.at(a, b) != 0 && (basis[b].p != basis[a].p + 1 || basis[b].q != basis[a].q + 1)) {
        bad.push_back("c1 multiplication does not raise bidegree by (1,1)");
        goto r_done;
      }
r_done: {
  // with R_a^b storing c_1 cup gamma_a = R_a^b gamma_b, the operator identity
  // [mu, c_1 cup] = c_1 cup reads R mu - mu R = R on the stored matrices
  RatMatrix m0 = mu();
  if (!(R * m0 - m0 * R == R)) bad.push_back("[mu, R] != R");
}
  if (is_even()) {
    RatMatrix re = R * eta;
    if (!(re == re.transpose())) bad.push_back("c1 multiplication not self-adjoint for pairing");
  }
  return bad;
}

RatMatrix CohModel::mu(const Rational& s) const {
  RatMatrix m(dim(), dim());
  for (long a = 0; a < dim(); ++a) m.at(a, a) = mu_entry(a, s);
  return m;
}

Rational CohModel::mu_entry(long a, const Rational& s) const {
  Rational half_r = Rational(r) / 2;
  return (1 - s) * (Rational(basis[a].p) - half_r) + s * (Rational(basis[a].q) - half_r);
}

Rational CohModel::rho() const {
  return (Rational(3 - r) * chern_cr - 2 * chern_c1crm1) / 48;
}

Rational CohModel::str(const RatMatrix& m) const {
  Rational s = 0;
  for (long a = 0; a < dim(); ++a) s += basis[a].odd() ? -m.at(a, a) : m.at(a, a);
  return s;
}

Rational CohModel::rho_tilde() const {
  Rational s = 0;
  for (long a = 0; a < dim(); ++a) {
    Rational d = basis[a].p - basis[a].q;
    s += basis[a].odd() ? Rational(-d * d) : Rational(d * d);
  }
  return s;
}

CohModel::LibgoberResult CohModel::libgober_check() const {
  RatMatrix m0 = mu();
  Rational lhs = str(m0 * m0);
  Rational rhs = (Rational(r) * chern_cr + 2 * chern_c1crm1) / 12;
  return {lhs, rhs, lhs == rhs};
}

long CohModel::vdim(int g, long beta_c1, int n) const {
  return (3L - r) * (g - 1) + beta_c1 + n;
}

RatMatrix CohModel::eta_inv() const { return eta.inverse(); }

}  // namespace gwvir
