#pragma once
// KdV hierarchy route to the point correlators, independent of the Virasoro
// recursion, plus jet-level residuals for the hierarchy identities.

#include "gwvir/gelfand_dikii.hpp"
#include "gwvir/jet.hpp"
#include "gwvir/tau.hpp"

namespace gwvir {

// Correlator values computed from the Gelfand-Dikii polynomials together with
// the string equation alone.  Shares no code path with TauStore::compute.
class KdvOracle {
 public:
  explicit KdvOracle(GelfandDikii& gd) : gd_(gd) {}

  Rational tau(const TauKey& key);
  Rational tau(int g, std::vector<int> ks);
  size_t memo_size() const { return memo_.size(); }

 private:
  GelfandDikii& gd_;
  std::map<TauKey, Rational> memo_;

  Rational compute(const TauKey& key);
  // <tau_0 tau_{m-1} prod_X>_g read off from hbar <<tau_{m-1} tau_0>> = R_m(u)
  Rational witten_value(int m, const std::vector<int>& X, int g);
  // coefficient of (t^mu, hbar^h) in the jet of u^(i) = hbar <<tau_0^{i+2}>>
  Rational ujet_coeff(int i, const std::vector<int>& mu, int h);
};

// Jets of multi-point functions of the point target built from a TauStore.
// Variables are t_m (plain) or s_m (rescaled), id = m.
class PointJets {
 public:
  PointJets(TauStore& store, int D, int M, int G, bool rescaled)
      : store_(&store), D_(D), M_(M), G_(G), s_(rescaled) {}

  // << prod tau_ins >> resp. << prod sigma_ins >>, hbar floor -1
  Jet corr(const std::vector<int>& ins) const;
  Jet u() const { return corr({0, 0}).times_hbar(1); }  // hbar floor 0
  Jet ujet(int i) const;                                // u^(i) built directly

  // K p = hbar/8 p''' + u p' + 1/2 u' p with the t_0 resp. s_0 derivative
  Jet K(const Jet& p) const;
  Jet d(const Jet& p) const { return p.d(0); }

  int D() const { return D_; }
  int M() const { return M_; }
  int G() const { return G_; }

 private:
  TauStore* store_;
  int D_, M_, G_;
  bool s_;
};

// hbar <<tau_m tau_0>> - R_{m+1}(u), in t coordinates
Jet witten_residual(TauStore& store, GelfandDikii& gd, int m, int D, int M, int G);

// the Virasoro constraint z_k written in the rescaled variables
Jet z_constraint_jet(TauStore& store, int k, int D, int M, int G);

// partial K partial z_{k-1} - partial^3 z_k
Jet dvv_residual(TauStore& store, int k, int D, int M, int G);

// nontrivial intermediate identities from the z-recursion proof, k >= 1:
// a, b, and the residuals of their derivative identities
struct DvvProofJets {
  Jet a, b;
  Jet da_residual;   // da - hbar/2 sum_{i+j=k-2} d<s_i> d^2<s_{j+1}>
  Jet db_residual;   // db + hbar/2 sum_{i+j=k-2} d<s_i> K d<s_j>
  Jet dab_residual;  // d(a+b)
};
DvvProofJets dvv_proof_jets(TauStore& store, int k, int D, int M, int G);

}  // namespace gwvir
