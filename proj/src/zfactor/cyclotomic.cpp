#include "pfc/zfactor.hpp"

namespace pfc {

IntPoly cyclotomic(unsigned k) {
  if (k < 1 || k > 64) throw std::out_of_range("cyclotomic: order must be in [1, 64]");
  // x^k - 1 = prod_{d | k} Phi_d
  std::vector<Integer> c(k + 1);
  c[0] = -1;
  c[k] = 1;
  IntPoly p(std::move(c));
  for (unsigned d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto q = divide_exact(p, cyclotomic(d));
    p = *q;
  }
  return p;
}

}  // namespace pfc
