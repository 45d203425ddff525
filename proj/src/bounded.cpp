#include "pcx/bounded.hpp"

#include "pcx/error.hpp"

#include <algorithm>

namespace pcx {

BoundedComplex make_bounded(AlgebraPtr A, int lo, const std::vector<ProjModule>& terms,
                            const std::vector<ProjMap>& diffs) {
  if (!terms.empty() && diffs.size() + 1 != terms.size())
    throw Error(ErrorCode::ShapeMismatch, "bounded complex: need one differential between consecutive terms");
  ProjModule all;
  std::vector<int> degree;
  std::vector<std::size_t> offset;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    offset.push_back(all.size());
    for (int v : terms[k].summands) {
      all.summands.push_back(v);
      degree.push_back(lo + static_cast<int>(k));
    }
  }
  ProjMap d(A, all, all);
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].source() != terms[k] || diffs[k].target() != terms[k + 1])
      throw Error(ErrorCode::ShapeMismatch, "bounded complex: differential " + std::to_string(k) + " has the wrong shape");
    d.set_block(offset[k + 1], offset[k], diffs[k]);
  }
  return make_graded(std::move(A), 0, std::move(all), std::move(degree), std::move(d));
}

BoundedComplex from_resolution(const AlgebraPtr& A, const Resolution& r) {
  const int l = static_cast<int>(r.terms.size()) - 1;
  std::vector<ProjModule> terms(r.terms.rbegin(), r.terms.rend());
  std::vector<ProjMap> diffs(r.maps.rbegin(), r.maps.rend());
  return make_bounded(A, -l, terms, diffs);
}

BoundedComplex stalk(AlgebraPtr A, const ProjModule& P, int degree) {
  return make_bounded(std::move(A), degree, {P}, {});
}

ProjModule term(const Graded& X, int k) {
  ProjModule P;
  for (auto i : X.at_degree(normalize_degree(X.period, k))) P.summands.push_back(X.module[i]);
  return P;
}

ProjMap differential(const Graded& X, int k) {
  return X.d.restrict(X.at_degree(normalize_degree(X.period, k + 1)), X.at_degree(normalize_degree(X.period, k)));
}

std::optional<std::pair<int, int>> degree_range(const Graded& X) {
  if (X.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(X.degree.begin(), X.degree.end());
  return std::make_pair(*lo, *hi);
}

std::size_t width(const Graded& X) {
  const auto r = degree_range(X);
  return r ? static_cast<std::size_t>(r->second - r->first + 1) : 0;
}

BoundedComplex cone_bounded(const ChainMap& f) {
  if (!f.is_valid()) throw Error(ErrorCode::NotAComplex, "cone: the map is not a chain map");
  return cone(f.source, f.shifted_target(), f.map);
}

Minimization minimize_bounded(const BoundedComplex& X) {
  std::vector<std::size_t> order;
  const Graded sorted = sorted_by_degree(X, &order);
  Minimization m = minimize(sorted);
  // Re-express the equivalence against the original summand order.
  ProjMap P(X.A, X.module, sorted.module), Pinv(X.A, sorted.module, X.module);
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Element e = unit_at(*X.A, X.module[order[t]]);
    P.set(t, order[t], e);
    Pinv.set(order[t], t, e);
  }
  m.f = m.f * P;
  m.g = Pinv * m.g;
  m.s = Pinv * m.s * P;
  return m;
}

HomK hom_kb(const BoundedComplex& X, const BoundedComplex& Y, int l) {
  HomK h;
  h.space = chain_space(X, shift(Y, l));
  h.dim = h.space.dim_k();
  for (std::size_t k = 0; k < h.dim; ++k) h.basis.push_back(h.space.quotient_basis(k));
  return h;
}

ExtBasis ext_basis(const Representation& S, const Representation& T, int l, std::optional<std::size_t> bound) {
  ExtBasis e;
  e.degree = l;
  e.source = from_resolution(S.A, proj_resolution(S, bound));
  e.target = from_resolution(T.A, proj_resolution(T, bound));
  const HomK h = hom_kb(e.source, e.target, l);
  for (const auto& f : h.basis) e.basis.push_back(ChainMap{e.source, e.target, l, f});
  return e;
}

}  // namespace pcx
