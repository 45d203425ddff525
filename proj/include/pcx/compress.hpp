#pragma once

// Compression of bounded complexes to n-periodic complexes: the term at
// position r is the sum of the X^i with i = r mod n, the differential is the
// same matrix. Summands keep their order, so maps compress literally too.

#include "pcx/bounded.hpp"
#include "pcx/periodic.hpp"

#include <vector>

namespace pcx {

PeriodicComplex compress(const BoundedComplex& X, int n);

/// sum over shifts i = k n in the support window of dim Hom_{K^b}(X, Sigma^i Y),
/// against dim Hom_{K_n}(compress X, compress Y).
struct OrbitHom {
  std::size_t lhs = 0, rhs = 0;
  bool equal = false;
  std::vector<std::pair<int, std::size_t>> terms;  // (shift, dimension) with nonzero dimension
  std::pair<int, int> window{0, 0};
};
OrbitHom orbit_hom_check(const BoundedComplex& X, const BoundedComplex& Y, int n);

}  // namespace pcx
