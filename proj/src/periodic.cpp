#include "pcx/periodic.hpp"

#include "pcx/error.hpp"

namespace pcx {

PeriodicComplex make_periodic(AlgebraPtr A, int n, const std::vector<ProjModule>& terms,
                              const std::vector<ProjMap>& diffs) {
  if (n < 1 || terms.size() != static_cast<std::size_t>(n) || diffs.size() != terms.size())
    throw Error(ErrorCode::ShapeMismatch, "periodic complex: need n terms and n differentials");
  ProjModule all;
  std::vector<int> degree;
  std::vector<std::size_t> offset;
  for (int i = 0; i < n; ++i) {
    offset.push_back(all.size());
    for (int v : terms[i].summands) {
      all.summands.push_back(v);
      degree.push_back(i);
    }
  }
  ProjMap d(A, all, all);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (diffs[i].source() != terms[i] || diffs[i].target() != terms[j])
      throw Error(ErrorCode::ShapeMismatch, "periodic complex: differential " + std::to_string(i) + " has the wrong shape");
    // At n = 1 the single differential is the whole endomorphism.
    d.set_block(offset[j], offset[i], diffs[i]);
  }
  return make_graded(std::move(A), n, std::move(all), std::move(degree), std::move(d));
}

PeriodicComplex shift_periodic(const PeriodicComplex& X) { return shift(X, 1); }

PeriodicComplex cone_periodic(const PeriodicComplex& X, const PeriodicComplex& Y, const ProjMap& f) {
  if (!is_chain_map(X, Y, f)) throw Error(ErrorCode::NotAComplex, "cone: the map is not a chain map");
  return cone(X, Y, f);
}

RepComplex make_rep_complex(AlgebraPtr A, int n, std::vector<Representation> terms, std::vector<RepMap> diffs) {
  if (n < 1 || terms.size() != static_cast<std::size_t>(n) || diffs.size() != terms.size())
    throw Error(ErrorCode::ShapeMismatch, "periodic complex: need n terms and n differentials");
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    terms[i].validate();
    if (!diffs[i].is_homomorphism(terms[i], terms[j]))
      throw Error(ErrorCode::NotAComplex, "differential " + std::to_string(i) + " is not Lambda-linear");
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (!(diffs[j] * diffs[i]).is_zero())
      throw Error(ErrorCode::NotAComplex, "composite of differentials " + std::to_string(i) + " and " +
                                              std::to_string(j) + " is nonzero");
  }
  return RepComplex{std::move(A), n, std::move(terms), std::move(diffs)};
}

RepComplex evaluate(const PeriodicComplex& X) {
  if (X.period < 1) throw Error(ErrorCode::ShapeMismatch, "evaluate: expected a periodic complex");
  RepComplex R{X.A, X.period, {}, {}};
  for (int i = 0; i < X.period; ++i) R.terms.push_back(eval_proj(X.A, term(X, i)));
  for (int i = 0; i < X.period; ++i) R.diffs.push_back(eval_projmap(differential(X, i)));
  return R;
}

std::vector<RepMap> evaluate_map(const PeriodicComplex& X, const PeriodicComplex& Y, const ProjMap& f) {
  std::vector<RepMap> out;
  for (int i = 0; i < X.period; ++i) out.push_back(eval_projmap(f.restrict(Y.at_degree(i), X.at_degree(i))));
  return out;
}

bool is_chain_map(const RepComplex& X, const RepComplex& Y, const std::vector<RepMap>& f) {
  if (X.n != Y.n || f.size() != static_cast<std::size_t>(X.n)) return false;
  for (int i = 0; i < X.n; ++i) {
    const int j = (i + 1) % X.n;
    if (!f[i].is_homomorphism(X.terms[i], Y.terms[i])) return false;
    if (Y.diffs[i] * f[i] != f[j] * X.diffs[i]) return false;
  }
  return true;
}

namespace {

// Coordinates of the columns of `cols` (inside the ambient space) on the
// columns of an injective `incl`.
Matrix coordinates_in(const Matrix& incl, const Matrix& cols) {
  if (cols.cols() == 0) return Matrix(cols.field(), incl.cols(), 0);
  auto sol = solve(incl, cols);
  if (!sol) throw Error(ErrorCode::ShapeMismatch, "homology: vectors do not lie in the subspace");
  return sol->particular;
}

}  // namespace

std::vector<Homology> homology_periodic(const RepComplex& X) {
  std::vector<Homology> out;
  for (int i = 0; i < X.n; ++i) {
    const int prev = (i + X.n - 1) % X.n, next = (i + 1) % X.n;
    const Subobject cycles = kernel_image(X.terms[i], X.terms[next], X.diffs[i]).kernel;
    const Subobject bounds = kernel_image(X.terms[prev], X.terms[i], X.diffs[prev]).image;
    std::vector<Matrix> spans;
    for (int v = 0; v < X.A->vertex_count(); ++v)
      spans.push_back(coordinates_in(cycles.inclusion.comp[v], bounds.inclusion.comp[v]));
    const Quotient q = quotient(cycles.rep, submodule(cycles.rep, spans));
    out.push_back(Homology{q.rep, cycles, q});
  }
  return out;
}

std::vector<RepMap> induced_on_homology(const RepComplex& X, const RepComplex& Y, const std::vector<RepMap>& f) {
  const auto hx = homology_periodic(X), hy = homology_periodic(Y);
  std::vector<RepMap> out;
  for (int i = 0; i < X.n; ++i) {
    RepMap g;
    for (int v = 0; v < X.A->vertex_count(); ++v) {
      const Matrix lifted = hx[i].cycles.inclusion.comp[v] * hx[i].quotient.section[v];
      const Matrix image = f[i].comp[v] * lifted;
      g.comp.push_back(hy[i].quotient.projection.comp[v] * coordinates_in(hy[i].cycles.inclusion.comp[v], image));
    }
    out.push_back(std::move(g));
  }
  return out;
}

bool quasi_iso(const RepComplex& X, const RepComplex& Y, const std::vector<RepMap>& f) {
  if (!is_chain_map(X, Y, f)) return false;
  for (const auto& g : induced_on_homology(X, Y, f))
    for (const auto& m : g.comp)
      if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

HomK hom_kn(const PeriodicComplex& X, const PeriodicComplex& Y) {
  if (X.period < 1 || X.period != Y.period) throw Error(ErrorCode::ShapeMismatch, "hom: periods differ");
  HomK h;
  h.space = chain_space(X, Y);
  h.dim = h.space.dim_k();
  for (std::size_t k = 0; k < h.dim; ++k) h.basis.push_back(h.space.quotient_basis(k));
  return h;
}

IsoK iso_cn(const PeriodicComplex& X, const PeriodicComplex& Y, const SearchCaps& caps, Ambient ambient) {
  if (ambient == Ambient::Homotopy) return iso_k(X, Y, caps);
  IsoK r;
  auto trivial = [](const Graded& Z) {
    Minimization m;
    m.min = Z;
    m.f = ProjMap::identity(Z.A, Z.module);
    m.g = m.f;
    m.s = ProjMap(Z.A, Z.module, Z.module);
    return m;
  };
  r.mx = trivial(X);
  r.my = trivial(Y);
  r.search = find_isomorphism(X, Y, caps);
  return r;
}

}  // namespace pcx
