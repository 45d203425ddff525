#include "algebras.hpp"
#include "pcx/error.hpp"
#include "pcx/flags.hpp"
#include "pcx/periodic.hpp"
#include "random_objects.hpp"

#include <doctest.h>

using namespace pcx;
using namespace testalg;
using namespace testrand;

namespace {

PeriodicComplex p3_loop(const AlgebraPtr& A) {
  const ProjModule P = proj(A, {"3"});
  return make_periodic(A, 1, {P}, {map(A, P, P, {{"beta*alpha*delta*gamma"}})});
}

PeriodicComplex p2_p4(const AlgebraPtr& A) {
  const ProjModule P2 = proj(A, {"2"}), P4 = proj(A, {"4"});
  return make_periodic(A, 2, {P2, P4}, {map(A, P2, P4, {{"gamma*beta"}}), map(A, P4, P2, {{"alpha*delta"}})});
}

PeriodicComplex stalk1(const AlgebraPtr& A, const std::string& v) {
  const ProjModule P = proj(A, {v});
  return make_periodic(A, 1, {P}, {ProjMap(A, P, P)});
}

}  // namespace

TEST_CASE("periodic objects are validated") {
  auto L = cycle4_long(Field::prime(5));
  CHECK_NOTHROW(p3_loop(L));
  auto T = cycle4_two(Field::prime(5));
  const PeriodicComplex Y = p2_p4(T);
  CHECK(Y.period == 2);
  CHECK(Y.degree == std::vector<int>{0, 1});
  const ProjModule P = proj(T, {"2"});
  try {
    make_periodic(T, 1, {P}, {map(T, P, P, {{"1"}})});
    FAIL("accepted a differential with nonzero square");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAComplex);
  }
}

TEST_CASE("suspension") {
  auto A = cycle4_long(Field::prime(5));
  const PeriodicComplex X = p3_loop(A);
  const PeriodicComplex S = shift_periodic(X);
  CHECK(S.module == X.module);
  CHECK(S.d == -X.d);
  const PeriodicComplex S2 = shift_periodic(S);
  CHECK(S2.module == X.module);
  CHECK(S2.degree == X.degree);
  CHECK(S2.d == X.d);

  auto B = cycle4_long(Field::prime(2));
  CHECK(shift_periodic(p3_loop(B)).d == p3_loop(B).d);

  auto T = cycle4_two(Field::prime(3));
  const PeriodicComplex Y = p2_p4(T);
  const PeriodicComplex SY = shift_periodic(Y);
  CHECK(SY.degree == std::vector<int>{1, 0});
  CHECK(SY.d == -Y.d);
}

TEST_CASE("cones") {
  auto A = cycle3(Field::prime(5));
  const PeriodicComplex X = stalk1(A, "2");
  const PeriodicComplex C = cone_periodic(X, X, ProjMap::identity(A, X.module));
  CHECK(C.d == map(A, C.module, C.module, {{"0", "0"}, {"1", "0"}}));
  const auto s = null_homotopy(C, C, ProjMap::identity(A, C.module));
  REQUIRE(s);
  CHECK(*s == map(A, C.module, C.module, {{"0", "1"}, {"0", "0"}}));
  CHECK(minimize(C).min.empty());
  CHECK(homology_periodic(evaluate(C)).front().rep.is_zero());
  CHECK(hom_kn(X, C).dim == 0);

  auto T = triangle(Field::prime(3));
  const ProjModule P1 = proj(T, {"1"}), P23 = proj(T, {"2", "3"});
  const PeriodicComplex Q1 = make_periodic(T, 1, {P1}, {ProjMap(T, P1, P1)});
  const PeriodicComplex Q2 = make_periodic(T, 1, {P23}, {map(T, P23, P23, {{"0", "0"}, {"beta", "0"}})});
  const ProjMap f = map(T, P1, P23, {{"alpha"}, {"gamma"}});
  const PeriodicComplex Cf = cone_periodic(Q1, Q2, f);
  const ProjModule all = proj(T, {"1", "2", "3"});
  CHECK(Cf.module == all);
  CHECK(Cf.d == map(T, all, all, {{"0", "0", "0"}, {"alpha", "0", "0"}, {"gamma", "beta", "0"}}));
  const PeriodicComplex C0 = cone_periodic(Q1, Q2, ProjMap(T, P1, P23));
  CHECK(C0.d == direct_sum(shift_periodic(Q1), Q2).d);
}

TEST_CASE("homology") {
  auto A = cycle3(Field::prime(5));
  const ProjModule P = proj(A, {"2"});
  const PeriodicComplex X = make_periodic(A, 1, {P}, {map(A, P, P, {{"alpha*gamma*beta"}})});
  const auto H = homology_periodic(evaluate(X));
  REQUIRE(H.size() == 1);
  CHECK(H[0].rep.total_dim() == 2);
  CHECK(H[0].cycles.rep.total_dim() == 3);

  const Representation M = eval_proj(A, proj(A, {"1", "3"}));
  const RepComplex Z = make_rep_complex(A, 1, {M}, {RepMap::zero(M, M)});
  CHECK(homology_periodic(Z)[0].rep.dims == M.dims);

  const RepComplex EX = evaluate(X);
  CHECK(quasi_iso(EX, EX, {RepMap::identity(EX.terms[0])}));
  CHECK_FALSE(quasi_iso(EX, EX, {RepMap::zero(EX.terms[0], EX.terms[0])}));
}

TEST_CASE("null-homotopies and endomorphisms of the loop objects") {
  for (Field F : {Field::prime(3), Field::prime(5), Field::rationals()}) {
    CAPTURE(F.name());
    auto L = cycle4_long(F);
    const PeriodicComplex X = p3_loop(L);
    CHECK_FALSE(null_homotopy(X, X, ProjMap::identity(L, X.module)));
    CHECK(null_homotopy(X, X, ProjMap(L, X.module, X.module)) == ProjMap(L, X.module, X.module));
    CHECK(chain_space(X, X).cycles.cols() == 2);
    CHECK(hom_kn(X, X).dim == 1);
    const IndecResult r = indecomposable(X);
    CHECK(r.verdict == IndecVerdict::Indecomposable);
    CHECK(r.end_dim == 1);

    auto T = cycle4_two(F);
    const PeriodicComplex Y = p2_p4(T);
    CHECK(hom_kn(Y, Y).dim == 1);
    CHECK(indecomposable(Y).verdict == IndecVerdict::Indecomposable);

    const PeriodicComplex YY = direct_sum(Y, Y);
    const IndecResult d = indecomposable(YY);
    CHECK(d.verdict == IndecVerdict::Decomposable);
    REQUIRE(d.idempotent);
    CHECK(is_chain_map(YY, YY, *d.idempotent));
    const ProjMap e = *d.idempotent;
    CHECK(null_homotopy(YY, YY, e * e - e).has_value());
  }
}

TEST_CASE("isomorphism in the periodic categories") {
  auto A = cycle3(Field::prime(3));
  const ProjModule P = proj(A, {"2"});
  const PeriodicComplex X = make_periodic(A, 1, {P}, {map(A, P, P, {{"alpha*gamma*beta"}})});
  const PeriodicComplex Xn = shift_periodic(X);
  const IsoK same = iso_cn(X, X);
  CHECK(same.search.verdict == Verdict::Yes);
  const IsoK opp = iso_cn(X, Xn);
  CHECK(opp.search.verdict == Verdict::No);
  CHECK(opp.search.exhaustive);
  CHECK(iso_cn(X, Xn, {}, Ambient::Strict).search.verdict == Verdict::No);
  CHECK(iso_cn(X, stalk1(A, "1")).search.verdict == Verdict::No);

  auto B = cycle3(Field::prime(2));
  const ProjModule Q = proj(B, {"2"});
  const PeriodicComplex Y = make_periodic(B, 1, {Q}, {map(B, Q, Q, {{"alpha*gamma*beta"}})});
  CHECK(iso_cn(Y, shift_periodic(Y)).search.verdict == Verdict::Yes);
}

TEST_CASE("minimal model of the conjugated example") {
  auto A = cycle3(Field::rationals());
  const ProjModule P = proj(A, {"2"});
  const PeriodicComplex X = make_periodic(A, 1, {P}, {map(A, P, P, {{"alpha*gamma*beta"}})});
  const RelProjFlag r = relproj_to_flag(X);
  const Minimization m = minimize(r.Qprime);
  CHECK(m.min.module == P);
  CHECK(iso_cn(m.min, X, {}, Ambient::Strict).search.verdict == Verdict::Yes);
}

TEST_CASE("triangle rotation") {
  Rng rng(41);
  for (auto A : suite_algebras(Field::prime(3))) {
    for (int t = 0; t < 8; ++t) {
      const PeriodicComplex M = random_relproj(A, rng), N = random_relproj(A, rng);
      const ChainSpace cs = chain_space(M, N);
      const ProjMap f = cs.coords.from_vector(random_combination(cs.cycles, rng));
      const PeriodicComplex C = cone_periodic(M, N, f);
      const std::size_t m = M.size(), n = N.size();
      ProjMap incl(A, N.module, C.module), proj_(A, C.module, M.module);
      for (std::size_t i = 0; i < n; ++i) incl.set(m + i, i, unit_at(*A, N.module[i]));
      for (std::size_t i = 0; i < m; ++i) proj_.set(i, i, unit_at(*A, M.module[i]));
      CHECK(is_chain_map(N, C, incl));
      CHECK(is_chain_map(C, shift_periodic(M), proj_));
      CHECK((proj_ * incl).is_zero());
      const PeriodicComplex C2 = cone_periodic(N, C, incl);
      CHECK(iso_cn(C2, shift_periodic(M)).search.verdict == Verdict::Yes);
    }
  }
}

TEST_CASE("hom_kn is invariant under minimization") {
  Rng rng(43);
  for (auto A : suite_algebras(Field::prime(5))) {
    for (int t = 0; t < 10; ++t) {
      const PeriodicComplex X = random_relproj(A, rng), Y = random_relproj(A, rng);
      CHECK(hom_kn(X, Y).dim == hom_kn(minimize(X).min, minimize(Y).min).dim);
    }
  }
}
