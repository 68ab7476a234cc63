#pragma once
// Gelfand-Dikii polynomials R_m and the KdV hierarchy right hand sides.

#include "gwvir/diffalg.hpp"

namespace gwvir {

// K p = hbar/8 p''' + u p' + 1/2 u' p
DiffPoly apply_K(const DiffPoly& p);

class GelfandDikii {
 public:
  // R_0 = 1, (m + 1/2) d R_{m+1} = K R_m
  const DiffPoly& R(int m);

  // d R_{m+1}, the t_m flow of u
  DiffPoly kdv_rhs(int m);

 private:
  std::vector<DiffPoly> cache_;
};

}  // namespace gwvir
