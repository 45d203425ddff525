#pragma once

// Independent oracles shared by the property suites.

#include "random_objects.hpp"

#include <cstdint>

namespace testrand {

// Exhaustive search for s with f = s d + d s, run over the coordinates of
// degree -1 maps with plain integer arithmetic mod p.
inline bool brute_force_homotopic(const Graded& X, const Graded& Y, const ProjMap& f) {
  const std::uint32_t p = X.A->field().characteristic();
  const HomCoords hs = map_coords(X, Y, -1), h0 = map_coords(X, Y, 0);
  const std::size_t n = hs.dim(), m = h0.dim();
  auto to_ints = [&](const ProjMap& g) {
    const Matrix v = h0.to_vector(g);
    std::vector<std::uint32_t> out(m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::uint32_t c = 0; c < p; ++c)
        if (v(r, 0) == X.A->field().from_int(c)) out[r] = c;
    return out;
  };
  std::vector<std::vector<std::uint32_t>> cols;
  for (std::size_t k = 0; k < n; ++k) {
    const ProjMap s = hs.basis_map(k);
    cols.push_back(to_ints(s * X.d + Y.d * s));
  }
  const auto target = to_ints(f);
  std::vector<std::uint32_t> c(n, 0);
  for (;;) {
    bool hit = true;
    for (std::size_t r = 0; r < m && hit; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += std::uint64_t(c[k]) * cols[k][r];
      hit = acc % p == target[r];
    }
    if (hit) return true;
    std::size_t k = 0;
    while (k < n && ++c[k] == p) c[k++] = 0;
    if (k == n) return false;
  }
}

inline ProjMap random_chain_map(const Graded& X, const Graded& Y, Rng& rng) {
  const ChainSpace cs = chain_space(X, Y);
  return cs.coords.from_vector(random_combination(cs.cycles, rng));
}

}  // namespace testrand
