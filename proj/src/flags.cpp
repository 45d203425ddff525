#include "pcx/flags.hpp"

#include "pcx/compress.hpp"
#include "pcx/error.hpp"

#include <algorithm>

namespace pcx {

namespace {

ProjModule term_or_empty(const Resolution& r, std::size_t i) { return i < r.terms.size() ? r.terms[i] : ProjModule{}; }

ProjMap map_or_zero(const AlgebraPtr& A, const Resolution& r, std::size_t i) {
  // maps[i - 1]: P_i -> P_{i-1}
  if (i >= 1 && i - 1 < r.maps.size()) return r.maps[i - 1];
  return ProjMap(A, term_or_empty(r, i), term_or_empty(r, i - 1));
}

RepMap hstack(const RepMap& a, const RepMap& b) {
  RepMap out;
  for (std::size_t v = 0; v < a.comp.size(); ++v) out.comp.push_back(Matrix::hstack(a.comp[v], b.comp[v]));
  return out;
}

// Resolution of B from resolutions of a submodule A' (via iota) and of the
// quotient C = B / A' (via pi). Terms are quot_i + sub_i, differential
// [[d_quot, 0], [u, d_sub]], augmentation (a lift of the quotient augmentation, iota a).
Resolution horseshoe(const AlgebraPtr& A, const Resolution& sub, const Resolution& quot, const Representation& B,
                     const RepMap& iota, const RepMap& pi) {
  const std::size_t L = std::max(sub.terms.size(), quot.terms.size());
  Resolution out;
  const ProjModule Q0 = term_or_empty(quot, 0), S0 = term_or_empty(sub, 0);
  const auto g = lift(Q0, B, pi, quot.augmentation);
  if (!g) throw Error(ErrorCode::ShapeMismatch, "horseshoe: the quotient augmentation does not lift");
  const RepMap dS0 = iota * sub.augmentation;
  out.terms.push_back(ProjModule::direct_sum(Q0, S0));
  out.augmentation = hstack(*g, dS0);

  RepMap uprev = *g, dSprev = dS0;
  Representation prev_target = B;
  for (std::size_t i = 1; i < L; ++i) {
    const ProjModule Qi = term_or_empty(quot, i), Si = term_or_empty(sub, i);
    const ProjModule Qp = term_or_empty(quot, i - 1), Sp = term_or_empty(sub, i - 1);
    const ProjMap dQ = map_or_zero(A, quot, i), dS = map_or_zero(A, sub, i);
    const RepMap rhs = -(uprev * eval_projmap(dQ));
    const Representation Sp_rep = eval_proj(A, Sp);
    const auto u = lift(Qi, Sp_rep, dSprev, rhs);
    if (!u) throw Error(ErrorCode::ShapeMismatch, "horseshoe: connecting map does not lift");
    const ProjMap U = to_projmap(A, Qi, Sp, *u);

    const ProjModule Ti = ProjModule::direct_sum(Qi, Si), Tp = ProjModule::direct_sum(Qp, Sp);
    ProjMap d(A, Ti, Tp);
    d.set_block(0, 0, dQ);
    d.set_block(Qp.size(), 0, U);
    d.set_block(Qp.size(), Qi.size(), dS);
    out.terms.push_back(Ti);
    out.maps.push_back(d);

    uprev = *u;
    dSprev = eval_projmap(dS);
  }
  return out;
}

ProjMap sign_by_degree(const Graded& X) {
  ProjMap D(X.A, X.module, X.module);
  const Field F = X.A->field();
  for (std::size_t i = 0; i < X.size(); ++i) {
    const bool odd = ((X.degree[i] % 2) + 2) % 2 == 1;
    D.set(i, i, unit_at(*X.A, X.module[i]).scaled(odd ? -F.one() : F.one()));
  }
  return D;
}

}  // namespace

bool strictly_lower(const Graded& X, const std::vector<std::size_t>& block) {
  if (block.size() != X.size()) return false;
  for (std::size_t j = 0; j < X.size(); ++j)
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!X.d(j, i).is_zero() && block[j] <= block[i]) return false;
  return true;
}

FlagWitness flag_resolution(const RepComplex& M, std::optional<std::size_t> bound) {
  if (M.n != 1) throw Error(ErrorCode::ShapeMismatch, "flag resolution: only differential modules (n = 1)");
  const AlgebraPtr& A = M.A;
  const Representation& Mrep = M.terms[0];
  const RepMap& eps = M.diffs[0];
  const KernelImage ki = kernel_image(Mrep, Mrep, eps);
  const Subobject &Ker = ki.kernel, &Im = ki.image;

  const RepMap iota1 = corestrict(Ker, Im.inclusion);
  const Quotient H = quotient(Ker.rep, submodule(Ker.rep, iota1.comp));
  const Resolution rX = proj_resolution(Im.rep, bound);
  const Resolution rY = proj_resolution(H.rep, bound);
  const Resolution rK = horseshoe(A, rX, rY, Ker.rep, iota1, H.projection);
  const Resolution rM = horseshoe(A, rK, rX, Mrep, Ker.inclusion, corestrict(Im, eps));

  FlagWitness w;
  const std::size_t l = rM.terms.size() - 1;
  w.length = l;
  std::vector<std::size_t> offset(l + 1);
  ProjModule all;
  for (std::size_t step = 0; step <= l; ++step) {
    const std::size_t i = l - step;
    const ProjModule X = term_or_empty(rX, i), Y = term_or_empty(rY, i);
    if (rM.terms[i] != ProjModule::direct_sum(X, ProjModule::direct_sum(Y, X)))
      throw Error(ErrorCode::ShapeMismatch, "flag resolution: unexpected horseshoe term");
    offset[i] = all.size();
    for (const ProjModule* piece : {&X, &Y, &X}) {
      for (int v : piece->summands) {
        all.summands.push_back(v);
        w.block.push_back(w.pieces.size());
      }
      w.pieces.push_back(*piece);
    }
  }
  const Field F = A->field();
  ProjMap d(A, all, all);
  for (std::size_t i = 0; i <= l; ++i) {
    const ProjModule X = term_or_empty(rX, i), Y = term_or_empty(rY, i);
    const Scalar sign = i % 2 == 0 ? F.one() : -F.one();
    for (std::size_t t = 0; t < X.size(); ++t)
      d.set(offset[i] + X.size() + Y.size() + t, offset[i] + t, unit_at(*A, X[t]).scaled(sign));
    if (i >= 1) d.set_block(offset[i - 1], offset[i], rM.maps[i - 1]);
  }
  w.flag = make_graded(A, 1, all, std::vector<int>(all.size(), 0), d);

  RepMap aug;
  const Representation E = eval_proj(A, all);
  for (int v = 0; v < A->vertex_count(); ++v) {
    Matrix c(F, Mrep.dims[v], E.dims[v]);
    c.set_block(0, E.dims[v] - rM.augmentation.comp[v].cols(), rM.augmentation.comp[v]);
    aug.comp.push_back(c);
  }
  w.augmentation = aug;
  w.lower = strictly_lower(w.flag, w.block);
  w.quasi_iso = quasi_iso(evaluate(w.flag), M, {aug});
  return w;
}

RelProjFlag relproj_to_flag(const PeriodicComplex& P, std::optional<std::size_t> bound) {
  if (P.period != 1) throw Error(ErrorCode::ShapeMismatch, "relative projective: only differential modules (n = 1)");
  const AlgebraPtr& A = P.A;
  const Field F = A->field();
  RelProjFlag r;
  r.P = P;
  const ProjModule& P0 = P.module;
  const ProjMap& eps = P.d;

  // Resolution of Im(e): P_0 itself, then a resolution of Ker(e) spliced in.
  const Representation M = eval_proj(A, P0);
  const Subobject Ker = kernel_image(M, M, eval_projmap(eps)).kernel;
  std::vector<ProjModule> terms{P0};
  std::vector<ProjMap> maps;  // maps[i - 1]: P_i -> P_{i-1}
  if (!Ker.rep.is_zero()) {
    const Resolution rk = proj_resolution(Ker.rep, bound);
    terms.push_back(rk.terms[0]);
    maps.push_back(to_projmap(A, rk.terms[0], P0, Ker.inclusion * rk.augmentation));
    for (std::size_t k = 1; k < rk.terms.size(); ++k) {
      terms.push_back(rk.terms[k]);
      maps.push_back(rk.maps[k - 1]);
    }
  }
  const std::size_t l = terms.size() - 1;
  r.resolution = make_bounded(A, -static_cast<int>(l), {terms.rbegin(), terms.rend()}, {maps.rbegin(), maps.rend()});
  const Graded& Pb = r.resolution;
  const std::size_t n = Pb.size(), n0 = P0.size(), o0 = n - n0;

  // The lift of zero on Im(e): e on P_0, zero elsewhere.
  ProjMap phi(A, Pb.module, Pb.module);
  phi.set_block(o0, o0, eps);
  auto s = null_homotopy(Pb, Pb, phi);
  if (!s) throw Error(ErrorCode::NoHomotopy, "the lifted zero endomorphism is not null-homotopic");
  r.s = *s;
  r.deltaP = compress(Pb, 1);
  const ProjMap& dP = r.deltaP.d;
  r.h = r.s * sign_by_degree(Pb);
  r.e = ProjMap(A, Pb.module, P0);
  r.m = ProjMap(A, P0, Pb.module);
  for (std::size_t t = 0; t < n0; ++t) {
    r.e.set(t, o0 + t, unit_at(*A, P0[t]));
    r.m.set(o0 + t, t, unit_at(*A, P0[t]));
  }
  r.homotopy_identity = r.m * eps * r.e == dP * r.h - r.h * dP;

  const ProjModule QM = ProjModule::direct_sum(ProjModule::direct_sum(Pb.module, P0), Pb.module);
  const ProjMap one = ProjMap::identity(A, Pb.module);
  const std::vector<int> zeros(QM.size(), 0);

  ProjMap dQ(A, QM, QM);
  dQ.set_block(0, 0, -dP);
  dQ.set_block(n, n, eps);
  dQ.set_block(n + n0, 0, -one);
  dQ.set_block(n + n0, n + n0, dP);
  r.Q = make_graded(A, 1, QM, zeros, dQ);

  ProjMap dQp(A, QM, QM);
  dQp.set_block(0, 0, -dP);
  dQp.set_block(n, 0, -(eps * r.e));
  dQp.set_block(n + n0, 0, -(one + r.h));
  dQp.set_block(n + n0, n, -r.m);
  dQp.set_block(n + n0, n + n0, dP);
  r.Qprime = make_graded(A, 1, QM, zeros, dQp);

  r.f = ProjMap(A, QM, QM);
  r.f.set_block(0, 0, one + r.h);
  r.f.set_block(0, n, r.m);
  r.f.set_block(n, 0, r.e);
  r.f.set_block(n, n + n0, -(r.e * dP));
  r.f.set_block(n + n0, n + n0, one);
  auto inv = inverse(r.f);
  if (!inv) throw Error(ErrorCode::ShapeMismatch, "relative projective: f is not invertible");
  r.f_inverse = *inv;
  r.intertwines = r.Q.d * r.f == r.f * r.Qprime.d;

  for (std::size_t i = 0; i < n; ++i) r.block.push_back(static_cast<std::size_t>(Pb.degree[i] + static_cast<int>(l)));
  for (std::size_t t = 0; t < n0; ++t) r.block.push_back(l + 1);
  for (std::size_t i = 0; i < n; ++i) r.block.push_back(l + 2 + static_cast<std::size_t>(Pb.degree[i] + static_cast<int>(l)));
  r.lower = strictly_lower(r.Qprime, r.block);
  return r;
}

StalkCheck hereditary_stalk_check(const RepComplex& M, const SearchCaps& caps, std::optional<std::size_t> bound) {
  if (!M.A->is_hereditary())
    throw Error(ErrorCode::NotHereditary, "the algebra has relations; the stalk reduction needs a hereditary algebra");
  StalkCheck c;
  const Representation H = homology_periodic(M).front().rep;
  const RepComplex stalkH = make_rep_complex(M.A, 1, {H}, {RepMap::zero(H, H)});
  c.flag_m = flag_resolution(M, bound);
  c.flag_h = flag_resolution(stalkH, bound);
  c.iso = iso_cn(c.flag_m.flag, c.flag_h.flag, caps, Ambient::Homotopy);
  c.holds = c.iso.search.verdict == Verdict::Yes;
  return c;
}

}  // namespace pcx
