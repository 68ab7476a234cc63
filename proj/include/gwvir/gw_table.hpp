#pragma once
// Correlator tables over a cohomology model: sparse maps from (genus, degree,
// descendent insertions) to rationals with declared completeness bounds, the
// constraint residuals z_{k,g} evaluated on them, and the puncture, dilaton
// and divisor identity checks.

#include <iosfwd>
#include <optional>

#include "gwvir/coh_model.hpp"
#include "gwvir/tau.hpp"

namespace gwvir {

struct GWKey {
  int g = 0;
  std::vector<long> beta;                    // degree vector, empty for rank 0
  std::vector<std::pair<int, long>> taus;    // (descendent level, basis index)
  auto operator<=>(const GWKey&) const = default;
};

// sort the insertions in place; returns the parity sign of the permutation
// restricted to odd classes (0 when an odd insertion repeats)
int canonical_sign(const CohModel* model, std::vector<std::pair<int, long>>& taus);

class GWTable {
 public:
  std::string model_ref;                       // e.g. "builtin:point"
  int degree_rank = 0;
  std::vector<Rational> c1_beta;               // functional beta -> c_1 cap beta
  std::map<long, std::vector<Rational>> omega_beta;  // divisor index -> functional
  std::vector<std::vector<long>> allowed;      // declared nonzero degree vectors
  int gmax = 0;
  long kmax = 0;
  // positive-degree sectors admit unboundedly many divisor insertions at a
  // fixed level sum, so completeness additionally needs an insertion bound
  long nmax = 1L << 30;
  std::map<GWKey, Rational> entries;

  static GWTable parse(std::istream& is);
  std::string emit() const;

  void set(const CohModel* model, int g, std::vector<long> beta,
           std::vector<std::pair<int, long>> taus, const Rational& v);

  Rational c1_cap(const std::vector<long>& beta) const;
  std::optional<Rational> omega_cap(long a, const std::vector<long>& beta) const;
  bool degree_declared(const std::vector<long>& beta) const;

  // value with the zero conventions applied: negative descendent level, an
  // unstable degree-zero configuration, a dimension mismatch, or a negative
  // degree coordinate give 0; inside the declared bounds a missing entry is 0;
  // outside the bounds the value is indeterminate (nullopt)
  std::optional<Rational> lookup(const CohModel& model, int g,
                                 const std::vector<long>& beta,
                                 std::vector<std::pair<int, long>> taus) const;
};

// all point correlators with genus <= gmax and level sum <= kmax
GWTable export_point_table(TauStore& store, int gmax, long kmax);

// complete correlator table for the projective line with g <= 1, level sum
// <= 1, at most 3 insertions, degrees 0 and 1
GWTable sample_p1_table();

// coefficient of the probe derivative monomial of z_{k,g} at t = 0 in degree
// beta; nullopt when the table bounds do not cover a needed correlator
std::optional<Rational> z_residual(const GWTable& table, const CohModel& model,
                                   int k, int g,
                                   const std::vector<std::pair<int, long>>& probe,
                                   const std::vector<long>& beta);

struct EqCheckReport {
  int checked = 0;
  int skipped = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

EqCheckReport puncture_check(const GWTable& table, const CohModel& model);
EqCheckReport dilaton_check(const GWTable& table, const CohModel& model);
// omega must be a divisor class proportional to c_1 with a declared pairing
EqCheckReport divisor_check(const GWTable& table, const CohModel& model, long omega);

}  // namespace gwvir
