#include "pcx/compress.hpp"

#include "pcx/error.hpp"

namespace pcx {

PeriodicComplex compress(const BoundedComplex& X, int n) {
  if (n < 1) throw Error(ErrorCode::ShapeMismatch, "compress: period must be positive");
  if (X.period != 0) throw Error(ErrorCode::ShapeMismatch, "compress: expected a bounded complex");
  Graded C = X;
  C.period = n;
  for (auto& k : C.degree) k = normalize_degree(n, k);
  validate(C);
  return C;
}

OrbitHom orbit_hom_check(const BoundedComplex& X, const BoundedComplex& Y, int n) {
  OrbitHom out;
  const auto rx = degree_range(X), ry = degree_range(Y);
  if (rx && ry) {
    out.window = {ry->first - rx->second - 1, ry->second - rx->first + 1};
    for (int i = out.window.first; i <= out.window.second; ++i) {
      if (normalize_degree(n, i) != 0) continue;
      const std::size_t d = hom_kb(X, Y, i).dim;
      if (d) out.terms.emplace_back(i, d);
      out.lhs += d;
    }
  }
  out.rhs = hom_kn(compress(X, n), compress(Y, n)).dim;
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace pcx
