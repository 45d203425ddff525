#include "algebras.hpp"
#include "pcx/error.hpp"
#include "pcx/nongrad.hpp"

#include <doctest.h>

using namespace pcx;
using namespace testalg;

namespace {

std::vector<int> arrows(const AlgebraPtr& A, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(*A->quiver().find_arrow(n));
  return out;
}

const std::vector<std::string> four = {"alpha", "beta", "gamma", "delta"};

PeriodicComplex p2_p4(const AlgebraPtr& A) {
  const ProjModule P2 = proj(A, {"2"}), P4 = proj(A, {"4"});
  return make_periodic(A, 2, {P2, P4}, {map(A, P2, P4, {{"gamma*beta"}}), map(A, P4, P2, {{"alpha*delta"}})});
}

PeriodicComplex p3_loop(const AlgebraPtr& A) {
  const ProjModule P = proj(A, {"3"});
  return make_periodic(A, 1, {P}, {map(A, P, P, {{"beta*alpha*delta*gamma"}})});
}

// Linear complex with the given terms and single-entry differentials.
BoundedComplex linear(const AlgebraPtr& A, const std::vector<std::string>& vs, const std::vector<std::string>& ds) {
  std::vector<ProjModule> terms;
  for (const auto& v : vs) terms.push_back(proj(A, {v}));
  std::vector<ProjMap> diffs;
  for (std::size_t k = 0; k < ds.size(); ++k) diffs.push_back(map(A, terms[k], terms[k + 1], {{ds[k]}}));
  return make_bounded(A, -static_cast<int>(ds.size()), terms, diffs);
}

}  // namespace

TEST_CASE("cycle complexes") {
  auto A = cycle4_two(Field::prime(5));
  const PeriodicComplex X = cycle_complex(A, arrows(A, four));
  CHECK(X.period == 2);
  CHECK(X.module == proj(A, {"2", "4"}));
  CHECK(X.d == p2_p4(A).d);

  auto B = cycle4_long(Field::prime(5));
  const PeriodicComplex Y = cycle_complex(B, arrows(B, four));
  CHECK(Y.period == 1);
  CHECK(Y.d == p3_loop(B).d);

  auto C = make(cycle_quiver(3), {"beta*alpha", "gamma*beta", "alpha*gamma"}, Field::prime(3));
  const PeriodicComplex Z = cycle_complex(C, arrows(C, {"alpha", "beta", "gamma"}));
  CHECK(Z.period == 3);
  CHECK(Z.module == proj(C, {"1", "2", "3"}));

  auto D = cycle3(Field::prime(3));
  const PeriodicComplex W = cycle_complex(D, arrows(D, {"alpha", "beta", "gamma"}));
  CHECK((W.d * W.d).is_zero());
  CHECK(W.period == 1);

  CHECK_THROWS_AS(cycle_complex(A, arrows(A, {"alpha", "gamma"})), Error);
  CHECK_THROWS_AS(cycle_complex(A, {}), Error);
}

TEST_CASE("splicing Ext classes reproduces the worked complexes") {
  for (Field F : {Field::prime(3), Field::prime(5), Field::rationals()}) {
    CAPTURE(F.name());
    auto A = cycle4_two(F);
    const int s1 = vertex(A, "1"), s3 = vertex(A, "3");
    const Splice sp = splice_ext(A, s1, {{s3, 2, {}}, {s1, 2, {}}});
    const BoundedComplex want = linear(A, {"3", "4", "2", "4", "1"}, {"gamma", "alpha*delta", "gamma*beta", "delta"});
    CHECK(sp.complex.module == want.module);
    CHECK(sp.complex.degree == want.degree);
    CHECK(sp.complex.d == want.d);
    CHECK(sp.end_dim == 1);
    CHECK(is_minimal(sp.complex));

    auto B = cycle4_long(F);
    const int t1 = vertex(B, "1"), t4 = vertex(B, "4");
    const Splice sq = splice_ext(B, t4, {{t1, 2, {}}, {t4, 1, {}}});
    const BoundedComplex want2 = linear(B, {"1", "3", "3", "4"}, {"beta*alpha", "beta*alpha*delta*gamma", "gamma"});
    CHECK(sq.complex.module == want2.module);
    CHECK(sq.complex.d == want2.d);
    CHECK(sq.end_dim == 1);
  }
}

TEST_CASE("splicing edge cases") {
  auto A = cycle4_two(Field::prime(3));
  const int s1 = vertex(A, "1"), s2 = vertex(A, "2");
  const Splice single = splice_ext(A, s1, {});
  CHECK(single.complex.d == linear(A, {"3", "4", "1"}, {"gamma", "delta"}).d);
  try {
    splice_ext(A, s1, {{s2, 2, {}}});
    FAIL("expected a vanishing Ext class");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroExt);
  }
}

TEST_CASE("non-gradability certificates") {
  for (Field F : {Field::prime(3), Field::prime(5), Field::rationals()}) {
    CAPTURE(F.name());
    auto A = cycle4_two(F);
    const NongradResult r = nongradability_certificate(p2_p4(A), 1);
    CHECK(r.certificate.verdict == "NON_GRADABLE_OBJECT_EXISTS");
    CHECK(r.end_dim_pattern == 1);
    CHECK(r.wrapped.period == 1);
    CHECK(r.wrapped.size() == 2);
    for (const auto& c : r.certificate.checks) CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name);

    auto B = cycle4_long(F);
    const NongradResult q = nongradability_certificate(p3_loop(B), 1);
    CHECK(q.certificate.verdict == "NON_GRADABLE_OBJECT_EXISTS");
    CHECK(q.end_dim_pattern == 1);
    CHECK(q.indec.end_dim == 1);

    CHECK(nongradability_certificate(p2_p4(A), 2).certificate.verdict == "NON_GRADABLE_OBJECT_EXISTS");
  }
}

TEST_CASE("non-gradability fails on contractible and gradable patterns") {
  auto A = cycle4_two(Field::prime(5));
  const ProjModule P = proj(A, {"2", "2"});
  const PeriodicComplex C = make_periodic(A, 1, {P}, {map(A, P, P, {{"0", "0"}, {"1", "0"}})});
  const NongradResult r = nongradability_certificate(C, 1);
  CHECK(r.certificate.verdict != "NON_GRADABLE_OBJECT_EXISTS");
  CHECK(r.certificate.checks[1].status == CheckStatus::Fail);

  const ProjModule Q = proj(A, {"1", "2"});
  const PeriodicComplex G = make_periodic(A, 1, {Q}, {map(A, Q, Q, {{"0", "0"}, {"alpha", "0"}})});
  const NongradResult g = nongradability_certificate(G, 1);
  CHECK(g.certificate.verdict == "GRADABLE");
  REQUIRE(g.shape);
  CHECK(g.shape->degree == std::vector<int>{0, 1});
}

TEST_CASE("wrapping") {
  auto A = cycle4_two(Field::prime(3));
  const PeriodicComplex Y = p2_p4(A);
  const PeriodicComplex W1 = wrap(Y, 1);
  CHECK(W1.d == map(A, W1.module, W1.module, {{"0", "alpha*delta"}, {"gamma*beta", "0"}}));
  const PeriodicComplex W3 = wrap(Y, 3);
  CHECK(W3.size() == 6);
  CHECK(W3.period == 3);
  CHECK(wrap(Y, 2).d == Y.d);
}

namespace {

struct SignInstance {
  AlgebraPtr A;
  PeriodicComplex Q1, Q2;
  ProjMap f;
};

SignInstance sign_instance(Field F) {
  auto A = triangle(F);
  const ProjModule P1 = proj(A, {"1"}), P23 = proj(A, {"2", "3"});
  return {A, make_periodic(A, 1, {P1}, {ProjMap(A, P1, P1)}),
          make_periodic(A, 1, {P23}, {map(A, P23, P23, {{"0", "0"}, {"beta", "0"}})}),
          map(A, P1, P23, {{"alpha"}, {"gamma"}})};
}

}  // namespace

TEST_CASE("suspension sign phenomenon") {
  for (Field F : {Field::prime(3), Field::prime(5)}) {
    CAPTURE(F.name());
    const SignInstance s = sign_instance(F);
    const Naturality n = naturality_square(s.Q1, s.Q2, s.f);
    CHECK(n.verdict == Verdict::No);
    CHECK(n.search.exhaustive);
    CHECK_FALSE(n.degenerate);
    const SigmaCones c = sigma_cone_compare(s.Q1, s.Q2, s.f);
    CHECK(c.strict.search.verdict == Verdict::No);
    CHECK(c.strict.search.exhaustive);
    CHECK(c.homotopy.search.verdict == Verdict::No);
    const ProjModule all = proj(s.A, {"1", "2", "3"});
    CHECK(c.cone_sigma_f.d == map(s.A, all, all, {{"0", "0", "0"}, {"alpha", "0", "0"}, {"gamma", "-beta", "0"}}));
  }
  const SignInstance t = sign_instance(Field::prime(2));
  const Naturality n = naturality_square(t.Q1, t.Q2, t.f);
  CHECK(n.verdict == Verdict::Yes);
  CHECK(n.degenerate);
  REQUIRE(n.u);
  CHECK(n.u->is_invertible());
  CHECK(n.v->is_invertible());
  const SigmaCones c = sigma_cone_compare(t.Q1, t.Q2, t.f);
  CHECK(c.strict.search.verdict == Verdict::Yes);
  CHECK(c.degenerate);
}

TEST_CASE("naturality and cone comparison on trivial inputs") {
  auto A = cycle3(Field::prime(5));
  const ProjModule P = proj(A, {"2"});
  const PeriodicComplex X = make_periodic(A, 1, {P}, {ProjMap(A, P, P)});
  const Naturality n = naturality_square(X, X, ProjMap::identity(A, P));
  CHECK(n.verdict == Verdict::Yes);
  const SignInstance s = sign_instance(Field::prime(5));
  CHECK(sigma_cone_compare(s.Q1, s.Q2, ProjMap(s.A, s.Q1.module, s.Q2.module)).strict.search.verdict == Verdict::Yes);
}
