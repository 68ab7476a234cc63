#pragma once
// Intersection numbers <tau_{k1}...tau_{kn}>_g for the point target, computed
// from the Virasoro constraints, plus the string/dilaton reductions and the
// genus expansion term lists.

#include <iosfwd>
#include <optional>

#include "gwvir/exact_core.hpp"

namespace gwvir {

struct TauKey {
  int g = 0;
  std::vector<int> ks;  // sorted ascending

  static TauKey make(int g, std::vector<int> ks);
  auto operator<=>(const TauKey&) const = default;

  int n() const { return (int)ks.size(); }
  long sum() const;
  bool stable() const { return 2 * g - 2 + n() > 0; }
  bool dim_ok() const { return sum() == 3L * g - 3 + n(); }
  std::string str() const;  // "g;k1,k2,..."
};

class TauStore {
 public:
  Rational tau(const TauKey& key);
  Rational tau(int g, std::vector<int> ks);

  // correlator divided by the product of multiplicities factorials; this is
  // the coefficient of the corresponding t-monomial in F_g
  Rational tau_over_sym(const TauKey& key);

  // closed form (n-3)! / prod k_i! in genus zero (independent oracle)
  static Rational genus0_closed(const std::vector<int>& ks);

  // <tau_0 X>_g = sum over reductions; empty list for the <tau_0^3>_0 base
  static std::vector<std::pair<TauKey, Rational>> string_reduce(const TauKey& key);
  // <tau_1 X>_g = (2g-2+n(X)) <X>_g; nullopt for the <tau_1>_1 base
  static std::optional<std::pair<TauKey, Rational>> dilaton_reduce(const TauKey& key);

  // Virasoro constraint L_{k} applied at the pivot (largest index K = k+1):
  // returns (lead, rhs) with lead * tau(key) == rhs
  std::pair<Rational, Rational> recursion_sides(const TauKey& key);

  size_t memo_size() const { return memo_.size(); }
  void save_cache(std::ostream& os) const;
  void load_cache(std::istream& is);

 private:
  std::map<TauKey, Rational> memo_;
  Rational compute(const TauKey& key);
  Rational pivot_rhs(const TauKey& key);
};

// one monomial of the genus g potential in the variables G[k], divided by a
// power of u'
struct IzTerm {
  std::vector<int> ks;  // indices k >= 2, sorted
  Rational coeff;
  int uprime_power;  // 2g - 2 + n
};

std::vector<IzTerm> genus_potential_iz(TauStore& store, int g);

long partition_count(int n);

Rational multiset_sym_factor(const std::vector<int>& ks);  // prod mult_v!

}  // namespace gwvir
