#include "pcx/nongrad.hpp"

#include "pcx/compress.hpp"
#include "pcx/error.hpp"

#include <deque>
#include <numeric>

namespace pcx {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    default: return "UNKNOWN";
  }
}

namespace {

// Traversal order a, b, c as a word in composition order (c*b*a).
Word as_word(const std::vector<int>& arrows) { return Word(arrows.rbegin(), arrows.rend()); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

PeriodicComplex cycle_complex(const AlgebraPtr& A, const std::vector<int>& cycle) {
  const Quiver& Q = A->quiver();
  const std::size_t l = cycle.size();
  if (l == 0) throw Error(ErrorCode::CycleInvalid, "empty cycle");
  for (std::size_t k = 0; k < l; ++k) {
    if (cycle[k] < 0 || cycle[k] >= Q.arrow_count())
      throw Error(ErrorCode::CycleInvalid, "cycle: unknown arrow index " + std::to_string(cycle[k]));
  }
  for (std::size_t k = 0; k < l; ++k) {
    const Arrow &a = Q.arrow(cycle[k]), &b = Q.arrow(cycle[(k + 1) % l]);
    if (a.target != b.source)
      throw Error(ErrorCode::CycleInvalid, "cycle: " + a.name + " does not end where " + b.name + " starts");
  }
  auto nonzero = [&](const std::vector<int>& seq) { return A->index_of(as_word(seq)).has_value(); };

  // Maximal nonzero compositions, cut where the next arrow kills them and at the wrap.
  std::vector<std::vector<int>> seg;
  for (std::size_t k = 0; k < l;) {
    std::vector<int> s{cycle[k++]};
    while (k < l && nonzero(concat(s, {cycle[k]}))) s.push_back(cycle[k++]);
    seg.push_back(s);
  }
  if (seg.size() == 1 && nonzero(concat(seg[0], seg[0])))
    throw Error(ErrorCode::CycleInvalid, "cycle: the full loop has nonzero square");
  const std::vector<int> closing = concat(seg.back(), seg.front());
  if (seg.size() > 1 && nonzero(closing)) {
    std::vector<std::vector<int>> merged(seg.begin() + 1, seg.end() - 1);
    merged.push_back(closing);
    seg = std::move(merged);
  }

  std::vector<ProjModule> terms;
  std::vector<ProjMap> diffs;
  for (const auto& s : seg) terms.push_back(ProjModule{{Q.arrow(s.front()).source}});
  for (std::size_t k = 0; k < seg.size(); ++k) {
    const ProjModule &src = terms[k], &tgt = terms[(k + 1) % seg.size()];
    diffs.push_back(ProjMap::single(A, src, tgt, 0, 0, path_element(*A, as_word(seg[k]))));
  }
  return make_periodic(A, static_cast<int>(seg.size()), terms, diffs);
}

Splice splice_ext(const AlgebraPtr& A, int first, const std::vector<ExtStep>& chain,
                  std::optional<std::size_t> bound) {
  Splice out;
  auto res = [&](int v) { return from_resolution(A, proj_resolution(Representation::simple(A, v), bound)); };
  out.resolutions.push_back(res(first));
  if (chain.empty()) {
    out.raw = out.complex = out.resolutions[0];
    out.end_dim = hom_kb(out.complex, out.complex, 0).dim;
    return out;
  }

  // g: D -> Sigma^L R_k, with D the cone built so far.
  Graded D = out.resolutions[0];
  ProjMap g;
  int L = 0, prev = first;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const ExtStep& st = chain[k];
    const ExtBasis eb = ext_basis(Representation::simple(A, prev), Representation::simple(A, st.target), st.degree, bound);
    const std::string where = "Ext^" + std::to_string(st.degree) + "(S" + A->quiver().vertex_name(prev) + ", S" +
                              A->quiver().vertex_name(st.target) + ")";
    if (eb.basis.empty()) throw Error(ErrorCode::ZeroExt, where + " vanishes");
    ProjMap F(A, eb.source.module, eb.target.module);
    if (st.coeff.empty()) {
      F = eb.basis[0].map;
    } else {
      if (st.coeff.size() != eb.basis.size())
        throw Error(ErrorCode::ShapeMismatch, where + " has dimension " + std::to_string(eb.basis.size()));
      for (std::size_t i = 0; i < st.coeff.size(); ++i) F += eb.basis[i].map.scaled(st.coeff[i]);
    }
    const ChainMap cls{eb.source, eb.target, st.degree, F};
    if (null_homotopy(cls.source, cls.shifted_target(), F)) throw Error(ErrorCode::ZeroExt, where + ": the chosen class is zero");
    out.classes.push_back(cls);
    out.resolutions.push_back(eb.target);

    const Graded Z = shift(eb.target, L + st.degree);
    if (k == 0) {
      g = F;
    } else {
      const Graded Y = shift(out.resolutions[k], L);
      const ProjMap composite = F * g;
      const auto h = null_homotopy(D, Z, composite);
      if (!h) throw Error(ErrorCode::NoHomotopy, "consecutive classes do not compose to zero up to homotopy");
      const Graded C = cone(D, Y, g);
      ProjMap next(A, C.module, Z.module);
      next.set_block(0, 0, *h);
      next.set_block(0, D.size(), F);
      if (!is_chain_map(C, Z, next)) throw Error(ErrorCode::NoHomotopy, "splice: glued map is not a chain map");
      D = C;
      g = next;
    }
    L += st.degree;
    prev = st.target;
  }
  out.raw = cone(D, shift(out.resolutions.back(), L), g);
  Graded m = minimize_bounded(out.raw).min;
  if (const auto r = degree_range(m)) m = shift(m, r->second);
  out.complex = normalize_scalars(m);
  out.end_dim = hom_kb(out.complex, out.complex, 0).dim;
  return out;
}

std::optional<BoundedComplex> gradable_shape(const PeriodicComplex& X) {
  const std::size_t n = X.size();
  std::vector<std::optional<int>> lift(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (lift[start]) continue;
    lift[start] = X.degree[start];
    std::deque<std::size_t> todo{start};
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        // d(j, i) != 0 forces lift[j] = lift[i] + 1; d(i, j) != 0 forces lift[j] = lift[i] - 1.
        for (const auto& [entry, step] : {std::pair{&X.d(j, i), 1}, std::pair{&X.d(i, j), -1}}) {
          if (entry->is_zero()) continue;
          const int want = *lift[i] + step;
          if (!lift[j]) {
            lift[j] = want;
            todo.push_back(j);
          } else if (*lift[j] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  Graded B = X;
  B.period = 0;
  for (std::size_t i = 0; i < n; ++i) B.degree[i] = *lift[i];
  validate(B);
  return B;
}

PeriodicComplex wrap(const PeriodicComplex& Y, int n) {
  if (Y.period < 1 || n < 1) throw Error(ErrorCode::ShapeMismatch, "wrap: periods must be positive");
  const int p = Y.period;
  const std::size_t copies = static_cast<std::size_t>(std::lcm(p, n) / p), m = Y.size();
  ProjModule all;
  std::vector<int> degree;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < m; ++i) {
      all.summands.push_back(Y.module[i]);
      degree.push_back(normalize_degree(n, Y.degree[i] + static_cast<int>(c) * p));
    }
  ProjMap d(Y.A, all, all);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (Y.d(j, i).is_zero()) continue;
        const std::size_t tc = Y.degree[i] == p - 1 ? (c + 1) % copies : c;
        d.set(tc * m + j, c * m + i, Y.d(j, i));
      }
  return make_graded(Y.A, n, all, degree, d);
}

NongradResult nongradability_certificate(const PeriodicComplex& Y, int n, const SearchCaps& caps) {
  NongradResult r;
  r.pattern = Y;
  Certificate& c = r.certificate;
  c.justification = "an indecomposable periodic complex of finitely generated projectives yields a non-gradable object";

  const bool square_zero = (Y.d * Y.d).is_zero();
  c.checks.push_back({"d_squared_zero", square_zero ? CheckStatus::Pass : CheckStatus::Fail,
                      square_zero ? "d*d = 0" : "d*d != 0"});
  const bool minimal = is_minimal(Y);
  c.checks.push_back({"minimal", minimal ? CheckStatus::Pass : CheckStatus::Fail,
                      minimal ? "no differential entry has a unit coefficient" : "a differential entry is a unit"});

  bool periodic = Y.period >= 1;
  std::string why = periodic ? "" : "not a periodic object";
  if (periodic) {
    for (int k = 0; k < Y.period; ++k)
      if (Y.at_degree(k).empty()) {
        periodic = false;
        why = "degree " + std::to_string(k) + " is empty";
      }
  }
  if (periodic && square_zero) {
    r.shape = gradable_shape(Y);
    if (r.shape) {
      periodic = false;
      why = "the pattern lifts to a bounded complex";
    } else {
      why = "every degree occupied; no integer lift of the degrees is compatible with d";
    }
  }
  c.checks.push_back({"genuinely_periodic", periodic ? CheckStatus::Pass : CheckStatus::Fail, why});

  if (!square_zero || Y.period < 1) {
    c.checks.push_back({"indecomposable_wrap", CheckStatus::Unknown, "not evaluated"});
    c.verdict = "UNKNOWN";
    return r;
  }
  r.wrapped = wrap(Y, n);
  r.end_dim_pattern = hom_kn(Y, Y).dim;
  r.indec = indecomposable(r.wrapped, caps);
  CheckStatus st = CheckStatus::Unknown;
  if (r.indec.verdict == IndecVerdict::Indecomposable) st = CheckStatus::Pass;
  if (r.indec.verdict == IndecVerdict::Decomposable || r.indec.verdict == IndecVerdict::Zero) st = CheckStatus::Fail;
  c.checks.push_back({"indecomposable_wrap", st,
                      to_string(r.indec.verdict) + " via " + r.indec.method + ", dim End = " +
                          std::to_string(r.indec.end_dim)});

  bool all = true;
  for (const auto& ch : c.checks) all = all && ch.status == CheckStatus::Pass;
  if (all) {
    c.verdict = "NON_GRADABLE_OBJECT_EXISTS";
  } else if (r.shape) {
    c.verdict = "GRADABLE";
    c.justification = "the pattern is literally a compression";
  } else {
    c.verdict = "UNKNOWN";
  }
  return r;
}

Naturality naturality_square(const PeriodicComplex& Q1, const PeriodicComplex& Q2, const ProjMap& f,
                             const SearchCaps& caps) {
  if (Q1.period != 1 || Q2.period != 1) throw Error(ErrorCode::ShapeMismatch, "naturality square: differential modules only");
  if (!is_chain_map(Q1, Q2, f)) throw Error(ErrorCode::NotAComplex, "naturality square: f is not a chain map");
  const AlgebraPtr& A = Q1.A;
  const Field F = A->field();
  Naturality out;
  out.degenerate = F.characteristic() == 2;
  const ProjMap &e1 = Q1.d, &e2 = Q2.d;
  const HomCoords hu(A, Q1.module, Q1.module), hv(A, Q2.module, Q2.module), hs(A, Q1.module, Q2.module);
  const CoordSpace dom({hu, hv, hs}), cod({hu, hv, hs});
  // u: Q1 -> Sigma Q1 and v: Q2 -> Sigma Q2 are chain maps; v f - f u = s e1 - e2 s.
  const Matrix op = linear_operator(dom, cod, [&](const std::vector<ProjMap>& x) {
    const ProjMap &u = x[0], &v = x[1], &s = x[2];
    return std::vector<ProjMap>{u * e1 + e1 * u, v * e2 + e2 * v, v * f - f * u - s * e1 + e2 * s};
  });
  const Matrix N = nullspace(op);
  out.solution_dim = N.cols();
  const std::size_t n1 = Q1.size(), n2 = Q2.size();
  Matrix tops(F, n1 * n1 + n2 * n2, N.cols());
  for (std::size_t k = 0; k < N.cols(); ++k) {
    const auto maps = dom.from_vector(N, k);
    const Matrix tu = maps[0].top_matrix(), tv = maps[1].top_matrix();
    for (std::size_t i = 0; i < n1 * n1; ++i) tops(i, k) = tu(i / n1, i % n1);
    for (std::size_t i = 0; i < n2 * n2; ++i) tops(n1 * n1 + i, k) = tv(i / n2, i % n2);
  }
  out.search = search_invertible_top(F, tops, {n1, n2}, caps);
  out.verdict = out.search.verdict;
  if (out.verdict == Verdict::Yes) {
    Matrix c(F, N.cols(), 1);
    for (std::size_t k = 0; k < N.cols(); ++k) c(k, 0) = out.search.coeff[k];
    const auto maps = dom.from_vector(N * c);
    out.u = maps[0];
    out.v = maps[1];
    out.s = maps[2];
  }
  return out;
}

SigmaCones sigma_cone_compare(const PeriodicComplex& Q1, const PeriodicComplex& Q2, const ProjMap& f,
                              const SearchCaps& caps) {
  if (Q1.period != 1 || Q2.period != 1) throw Error(ErrorCode::ShapeMismatch, "cone comparison: differential modules only");
  SigmaCones out;
  out.degenerate = Q1.A->field().characteristic() == 2;
  out.cone_f = cone_periodic(Q1, Q2, f);
  out.cone_sigma_f = cone_periodic(shift_periodic(Q1), shift_periodic(Q2), f);
  out.strict = iso_cn(out.cone_f, out.cone_sigma_f, caps, Ambient::Strict);
  out.homotopy = iso_cn(out.cone_f, out.cone_sigma_f, caps, Ambient::Homotopy);
  return out;
}

}  // namespace pcx
