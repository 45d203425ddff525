#include "pcx/representation.hpp"

#include "pcx/error.hpp"

#include <sstream>

namespace pcx {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

// Position of each basis path inside hom_basis(source, target).
std::vector<std::size_t> hom_positions(const PathAlgebra& A) {
  std::vector<std::size_t> pos(A.dim());
  for (int v = 0; v < A.vertex_count(); ++v)
    for (int w = 0; w < A.vertex_count(); ++w) {
      const auto& h = A.hom_basis(v, w);
      for (std::size_t k = 0; k < h.size(); ++k) pos[h[k]] = k;
    }
  return pos;
}

std::size_t arrow_index(const PathAlgebra& A, int a) { return *A.index_of(Word{a}); }

// Solves basis * X = rhs, which must be solvable.
Matrix coordinates(const Matrix& basis, const Matrix& rhs, const char* what) {
  auto s = solve(basis, rhs);
  require(s.has_value(), what);
  return s->particular;
}

}  // namespace

Representation Representation::zero(AlgebraPtr A) {
  Representation M;
  M.dims.assign(A->vertex_count(), 0);
  for (int a = 0; a < A->quiver().arrow_count(); ++a) M.act.emplace_back(A->field(), 0, 0);
  M.A = std::move(A);
  return M;
}

Representation Representation::simple(AlgebraPtr A, int v) {
  Representation M;
  M.dims.assign(A->vertex_count(), 0);
  M.dims.at(v) = 1;
  const Quiver& Q = A->quiver();
  for (int a = 0; a < Q.arrow_count(); ++a)
    M.act.emplace_back(A->field(), M.dims[Q.arrow(a).source], M.dims[Q.arrow(a).target]);
  M.A = std::move(A);
  return M;
}

std::size_t Representation::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims) n += d;
  return n;
}

Matrix Representation::act_word(const Word& w) const {
  require(!w.empty(), "act_word: empty word");
  Matrix m = act[w.front()];
  for (std::size_t k = 1; k < w.size(); ++k) m = act[w[k]] * m;
  return m;
}

Matrix Representation::act_path(std::size_t i) const {
  const Path& p = A->path(i);
  if (p.word.empty()) return Matrix::identity(A->field(), dims[p.source]);
  return act_word(p.word);
}

void Representation::validate() const {
  const Quiver& Q = A->quiver();
  require(dims.size() == static_cast<std::size_t>(Q.vertex_count()), "representation: wrong number of vertices");
  require(act.size() == static_cast<std::size_t>(Q.arrow_count()), "representation: wrong number of arrows");
  for (int a = 0; a < Q.arrow_count(); ++a)
    require(act[a].rows() == dims[Q.arrow(a).source] && act[a].cols() == dims[Q.arrow(a).target],
            "representation: action of " + Q.arrow(a).name + " has the wrong shape");
  for (const auto& r : A->relations())
    require(act_word(r).is_zero(), "representation: relation " + A->word_string(r) + " acts nonzero");
}

std::string Representation::describe() const {
  std::ostringstream os;
  os << "dims [";
  for (std::size_t v = 0; v < dims.size(); ++v) os << (v ? ", " : "") << dims[v];
  os << "]";
  return os.str();
}

RepMap RepMap::zero(const Representation& M, const Representation& N) {
  RepMap f;
  for (std::size_t v = 0; v < M.dims.size(); ++v) f.comp.emplace_back(M.A->field(), N.dims[v], M.dims[v]);
  return f;
}

RepMap RepMap::identity(const Representation& M) {
  RepMap f;
  for (auto d : M.dims) f.comp.push_back(Matrix::identity(M.A->field(), d));
  return f;
}

bool RepMap::is_zero() const {
  for (const auto& m : comp)
    if (!m.is_zero()) return false;
  return true;
}

bool RepMap::is_homomorphism(const Representation& M, const Representation& N) const {
  const Quiver& Q = M.A->quiver();
  for (std::size_t v = 0; v < comp.size(); ++v)
    if (comp[v].rows() != N.dims[v] || comp[v].cols() != M.dims[v]) return false;
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const int u = Q.arrow(a).source, w = Q.arrow(a).target;
    if (comp[u] * M.act[a] != N.act[a] * comp[w]) return false;
  }
  return true;
}

RepMap RepMap::operator-() const {
  RepMap f = *this;
  for (auto& m : f.comp) m = -m;
  return f;
}

RepMap& RepMap::operator+=(const RepMap& o) {
  require(comp.size() == o.comp.size(), "RepMap sum: vertex counts differ");
  for (std::size_t v = 0; v < comp.size(); ++v) comp[v] += o.comp[v];
  return *this;
}

RepMap RepMap::scaled(const Scalar& s) const {
  RepMap f = *this;
  for (auto& m : f.comp) m = m.scaled(s);
  return f;
}

RepMap operator*(const RepMap& g, const RepMap& f) {
  require(g.comp.size() == f.comp.size(), "RepMap composition: vertex counts differ");
  RepMap h;
  for (std::size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v] * f.comp[v]);
  return h;
}

Representation direct_sum(const Representation& M, const Representation& N) {
  Representation S;
  S.A = M.A;
  const Quiver& Q = M.A->quiver();
  for (std::size_t v = 0; v < M.dims.size(); ++v) S.dims.push_back(M.dims[v] + N.dims[v]);
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const int u = Q.arrow(a).source, w = Q.arrow(a).target;
    Matrix m(M.A->field(), S.dims[u], S.dims[w]);
    m.set_block(0, 0, M.act[a]);
    m.set_block(M.dims[u], M.dims[w], N.act[a]);
    S.act.push_back(std::move(m));
  }
  return S;
}

RepMap direct_sum(const RepMap& f, const RepMap& g) {
  RepMap s;
  for (std::size_t v = 0; v < f.comp.size(); ++v) {
    const auto& a = f.comp[v];
    const auto& b = g.comp[v];
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    s.comp.push_back(std::move(m));
  }
  return s;
}

std::size_t proj_offset(const PathAlgebra& A, const ProjModule& P, std::size_t summand, int u) {
  std::size_t off = 0;
  for (std::size_t i = 0; i < summand; ++i) off += A.hom_basis(u, P[i]).size();
  return off;
}

Representation eval_proj(const AlgebraPtr& A, const ProjModule& P) {
  const Quiver& Q = A->quiver();
  const auto pos = hom_positions(*A);
  Representation M;
  M.A = A;
  M.dims.assign(A->vertex_count(), 0);
  for (int u = 0; u < A->vertex_count(); ++u)
    for (auto v : P.summands) M.dims[u] += A->hom_basis(u, v).size();
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const int x = Q.arrow(a).source, y = Q.arrow(a).target;
    const std::size_t ai = arrow_index(*A, a);
    Matrix m(A->field(), M.dims[x], M.dims[y]);
    for (std::size_t i = 0; i < P.size(); ++i) {
      const std::size_t oy = proj_offset(*A, P, i, y), ox = proj_offset(*A, P, i, x);
      const auto& paths = A->hom_basis(y, P[i]);
      for (std::size_t k = 0; k < paths.size(); ++k) {
        const int r = A->product(paths[k], ai);
        if (r >= 0) m(ox + pos[r], oy + k) = A->field().one();
      }
    }
    M.act.push_back(std::move(m));
  }
  return M;
}

RepMap eval_projmap(const ProjMap& f) {
  const PathAlgebra& A = *f.algebra();
  const auto pos = hom_positions(A);
  RepMap g;
  for (int u = 0; u < A.vertex_count(); ++u) {
    std::size_t rows = 0, cols = 0;
    for (auto w : f.target().summands) rows += A.hom_basis(u, w).size();
    for (auto v : f.source().summands) cols += A.hom_basis(u, v).size();
    Matrix m(A.field(), rows, cols);
    for (std::size_t i = 0; i < f.cols(); ++i) {
      const std::size_t oi = proj_offset(A, f.source(), i, u);
      const auto& paths = A.hom_basis(u, f.source()[i]);
      for (std::size_t j = 0; j < f.rows(); ++j) {
        const Element& e = f(j, i);
        if (e.is_zero()) continue;
        const std::size_t oj = proj_offset(A, f.target(), j, u);
        for (std::size_t k = 0; k < paths.size(); ++k)
          for (const auto& [b, c] : e.terms()) {
            const int r = A.product(b, paths[k]);
            if (r >= 0) m(oj + pos[r], oi + k) += c;
          }
      }
    }
    g.comp.push_back(std::move(m));
  }
  return g;
}

RepMap map_from_generators(const ProjModule& P, const Representation& M, const std::vector<Matrix>& gens) {
  const PathAlgebra& A = *M.A;
  require(gens.size() == P.size(), "map_from_generators: one generator image per summand");
  RepMap f;
  for (int u = 0; u < A.vertex_count(); ++u) {
    std::size_t cols = 0;
    for (auto v : P.summands) cols += A.hom_basis(u, v).size();
    f.comp.emplace_back(A.field(), M.dims[u], cols);
  }
  for (std::size_t i = 0; i < P.size(); ++i) {
    require(gens[i].rows() == M.dims[P[i]] && gens[i].cols() == 1, "map_from_generators: generator shape");
    for (int u = 0; u < A.vertex_count(); ++u) {
      const std::size_t off = proj_offset(A, P, i, u);
      const auto& paths = A.hom_basis(u, P[i]);
      for (std::size_t k = 0; k < paths.size(); ++k) f.comp[u].set_block(0, off + k, M.act_path(paths[k]) * gens[i]);
    }
  }
  return f;
}

ProjMap projmap_from_generators(const AlgebraPtr& A, const ProjModule& P, const ProjModule& Q,
                                const std::vector<Matrix>& gens) {
  require(gens.size() == P.size(), "projmap_from_generators: one generator image per summand");
  ProjMap f(A, P, Q);
  for (std::size_t i = 0; i < P.size(); ++i) {
    const int v = P[i];
    for (std::size_t j = 0; j < Q.size(); ++j) {
      const std::size_t off = proj_offset(*A, Q, j, v);
      const auto& paths = A->hom_basis(v, Q[j]);
      Element e;
      for (std::size_t k = 0; k < paths.size(); ++k)
        if (!gens[i](off + k, 0).is_zero()) e += Element::basis(paths[k], gens[i](off + k, 0));
      if (!e.is_zero()) f.set(j, i, std::move(e));
    }
  }
  return f;
}

Matrix generator_image(const AlgebraPtr& A, const ProjModule& P, const RepMap& f, std::size_t summand) {
  // e_v is the first path in hom_basis(v, v).
  const int v = P[summand];
  return f.comp[v].column(proj_offset(*A, P, summand, v));
}

ProjMap to_projmap(const AlgebraPtr& A, const ProjModule& P, const ProjModule& Q, const RepMap& f) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < P.size(); ++i) gens.push_back(generator_image(A, P, f, i));
  return projmap_from_generators(A, P, Q, gens);
}

std::vector<RepMap> hom_space(const Representation& M, const Representation& N) {
  const PathAlgebra& A = *M.A;
  const Quiver& Q = A.quiver();
  const int nv = A.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  std::size_t eqs = 0;
  for (int a = 0; a < Q.arrow_count(); ++a) eqs += N.dims[Q.arrow(a).source] * M.dims[Q.arrow(a).target];
  Matrix sys(A.field(), eqs, off[nv]);
  std::size_t e0 = 0;
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const int u = Q.arrow(a).source, w = Q.arrow(a).target;
    const Matrix& am = M.act[a];
    const Matrix& an = N.act[a];
    // F_u * am - an * F_w = 0, an equation per entry (r, c) of a dims_N[u] x dims_M[w] matrix.
    for (std::size_t r = 0; r < N.dims[u]; ++r)
      for (std::size_t c = 0; c < M.dims[w]; ++c) {
        const std::size_t eq = e0 + r * M.dims[w] + c;
        for (std::size_t s = 0; s < M.dims[u]; ++s) sys(eq, off[u] + r * M.dims[u] + s) += am(s, c);
        for (std::size_t t = 0; t < N.dims[w]; ++t) sys(eq, off[w] + t * M.dims[w] + c) -= an(r, t);
      }
    e0 += N.dims[u] * M.dims[w];
  }
  const Matrix ker = nullspace(sys);
  std::vector<RepMap> basis;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    RepMap f = RepMap::zero(M, N);
    for (int v = 0; v < nv; ++v)
      for (std::size_t r = 0; r < N.dims[v]; ++r)
        for (std::size_t s = 0; s < M.dims[v]; ++s) f.comp[v](r, s) = ker(off[v] + r * M.dims[v] + s, k);
    basis.push_back(std::move(f));
  }
  return basis;
}

Subobject submodule(const Representation& M, const std::vector<Matrix>& spans) {
  const Quiver& Q = M.A->quiver();
  Subobject S;
  S.rep.A = M.A;
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    const Matrix& b = spans[v];
    Matrix basis = b.select_columns(independent_columns(b));
    if (basis.rows() != M.dims[v]) basis = Matrix(M.A->field(), M.dims[v], 0);
    S.rep.dims.push_back(basis.cols());
    S.inclusion.comp.push_back(std::move(basis));
  }
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const int u = Q.arrow(a).source, w = Q.arrow(a).target;
    const Matrix image = M.act[a] * S.inclusion.comp[w];
    if (S.rep.dims[u] == 0) {
      require(image.is_zero(), "submodule: span not closed under the action");
      S.rep.act.emplace_back(M.A->field(), 0, S.rep.dims[w]);
    } else {
      S.rep.act.push_back(coordinates(S.inclusion.comp[u], image, "submodule: span not closed under the action"));
    }
  }
  return S;
}

RepMap corestrict(const Subobject& S, const RepMap& f) {
  RepMap g;
  for (std::size_t v = 0; v < f.comp.size(); ++v) g.comp.push_back(coordinates(S.inclusion.comp[v], f.comp[v], "corestrict"));
  return g;
}

KernelImage kernel_image(const Representation& M, const Representation& N, const RepMap& f) {
  std::vector<Matrix> ker, im;
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    ker.push_back(nullspace(f.comp[v]));
    im.push_back(f.comp[v]);
  }
  return KernelImage{submodule(M, ker), submodule(N, im)};
}

Quotient quotient(const Representation& M, const Subobject& S) {
  const Quiver& Q = M.A->quiver();
  const Field F = M.A->field();
  Quotient out;
  out.rep.A = M.A;
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    const Matrix& b = S.inclusion.comp[v];
    const Matrix id = Matrix::identity(F, M.dims[v]);
    const Matrix c = id.select_columns(extend_basis(b, id));
    const Matrix full = Matrix::hstack(b, c);
    const Matrix inv = *inverse(full);
    out.rep.dims.push_back(c.cols());
    out.projection.comp.push_back(inv.block(b.cols(), 0, c.cols(), M.dims[v]));
    out.section.push_back(c);
  }
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const int u = Q.arrow(a).source, w = Q.arrow(a).target;
    out.rep.act.push_back(out.projection.comp[u] * M.act[a] * out.section[w]);
  }
  return out;
}

Cover top_and_cover(const Representation& M) {
  const PathAlgebra& A = *M.A;
  const Quiver& Q = A.quiver();
  const Field F = A.field();
  Cover c;
  for (int u = 0; u < A.vertex_count(); ++u) {
    Matrix rad(F, M.dims[u], 0);
    for (int a = 0; a < Q.arrow_count(); ++a)
      if (Q.arrow(a).source == u) rad = Matrix::hstack(rad, M.act[a]);
    const Matrix id = Matrix::identity(F, M.dims[u]);
    for (auto k : extend_basis(rad, id)) {
      c.top.summands.push_back(u);
      c.generators.push_back(id.column(k));
    }
  }
  c.map = map_from_generators(c.top, M, c.generators);
  return c;
}

std::optional<RepMap> lift(const ProjModule& P, const Representation& M, const RepMap& pi, const RepMap& f) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < P.size(); ++i) {
    const Matrix y = generator_image(M.A, P, f, i);
    auto s = solve(pi.comp[P[i]], y);
    if (!s) return std::nullopt;
    gens.push_back(s->particular);
  }
  return map_from_generators(P, M, gens);
}

Resolution proj_resolution(const Representation& M, std::optional<std::size_t> bound) {
  const AlgebraPtr& A = M.A;
  const std::size_t limit = bound.value_or(A->dim());
  Resolution res;
  Cover c0 = top_and_cover(M);
  res.terms.push_back(c0.top);
  res.augmentation = c0.map;
  Representation current = eval_proj(A, c0.top);
  Subobject K = kernel_image(current, M, c0.map).kernel;
  while (!K.rep.is_zero()) {
    if (res.terms.size() > limit)
      throw Error(ErrorCode::GldimBoundExceeded,
                  "kernel still nonzero after " + std::to_string(limit) + " resolution steps");
    Cover c = top_and_cover(K.rep);
    const RepMap into = K.inclusion * c.map;
    res.maps.push_back(to_projmap(A, c.top, res.terms.back(), into));
    res.terms.push_back(c.top);
    current = eval_proj(A, c.top);
    K = kernel_image(current, K.rep, c.map).kernel;
  }
  return res;
}

}  // namespace pcx
