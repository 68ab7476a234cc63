#include "gwvir/gelfand_dikii.hpp"

namespace gwvir {

DiffPoly apply_K(const DiffPoly& p) {
  DiffPoly r = Rational(1, 8) * (DiffPoly::hbar() * p.derive(3));
  r += DiffPoly::jet(0) * p.derive();
  r += Rational(1, 2) * (DiffPoly::jet(1) * p);
  return r;
}

const DiffPoly& GelfandDikii::R(int m) {
  if (m < 0) throw std::invalid_argument("R_m needs m >= 0");
  if (cache_.empty()) cache_.push_back(DiffPoly::constant(1));
  while ((int)cache_.size() <= m) {
    int k = (int)cache_.size() - 1;  // have R_k, build R_{k+1}
    auto anti = apply_K(cache_[k]).integrate();
    if (!anti) throw std::logic_error("K R_m not a total derivative");
    // fix the constant: R_{m+1} has no pure-hbar part; integrate() already
    // returns an antiderivative with zero constant term
    cache_.push_back(Rational(2, 2 * k + 1) * *anti);
  }
  return cache_[m];
}

DiffPoly GelfandDikii::kdv_rhs(int m) { return R(m + 1).derive(); }

}  // namespace gwvir
