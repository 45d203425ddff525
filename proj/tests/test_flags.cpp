#include "algebras.hpp"
#include "pcx/error.hpp"
#include "pcx/flags.hpp"
#include "random_objects.hpp"

#include <doctest.h>

using namespace pcx;
using namespace testalg;
using namespace testrand;

namespace {

PeriodicComplex p2_example(const AlgebraPtr& A) {
  const ProjModule P = proj(A, {"2"});
  return make_graded(A, 1, P, {0}, map(A, P, P, {{"alpha*gamma*beta"}}));
}

}  // namespace

TEST_CASE("relative projective (P2, alpha gamma beta) matches the worked conjugation") {
  for (Field F : {Field::rationals(), Field::prime(5)}) {
    CAPTURE(F.name());
    auto A = cycle3(F);
    const RelProjFlag r = relproj_to_flag(p2_example(A));
    const ProjModule QM = proj(A, {"1", "2", "2", "1", "2"});
    REQUIRE(r.Qprime.module == QM);
    const auto eps = "alpha*gamma*beta";
    const ProjMap eQp = map(A, QM, QM,
                            {{"0", "0", "0", "0", "0"},
                             {"-alpha", "0", "0", "0", "0"},
                             {"0", std::string("-") + eps, "0", "0", "0"},
                             {"-1", "-gamma*beta", "0", "0", "0"},
                             {"0", "-1", "-1", "alpha", "0"}});
    const ProjMap eQ = map(A, QM, QM,
                           {{"0", "0", "0", "0", "0"},
                            {"-alpha", "0", "0", "0", "0"},
                            {"0", "0", eps, "0", "0"},
                            {"-1", "0", "0", "0", "0"},
                            {"0", "-1", "0", "alpha", "0"}});
    const ProjMap f = map(A, QM, QM,
                          {{"1", "gamma*beta", "0", "0", "0"},
                           {"0", "1", "1", "0", "0"},
                           {"0", "1", "0", "-alpha", "0"},
                           {"0", "0", "0", "1", "0"},
                           {"0", "0", "0", "0", "1"}});
    const ProjMap finv = map(A, QM, QM,
                             {{"1", "0", "-gamma*beta", "0", "0"},
                              {"0", "0", "1", "alpha", "0"},
                              {"0", "1", "-1", "-alpha", "0"},
                              {"0", "0", "0", "1", "0"},
                              {"0", "0", "0", "0", "1"}});
    CHECK(r.Qprime.d == eQp);
    CHECK(r.Q.d == eQ);
    CHECK(r.f == f);
    CHECK(r.f_inverse == finv);
    CHECK(finv * eQ * f == eQp);
    CHECK(f * finv == ProjMap::identity(A, QM));
    CHECK(r.h == map(A, r.deltaP.module, r.deltaP.module, {{"0", "gamma*beta"}, {"0", "0"}}));
    CHECK(r.homotopy_identity);
    CHECK(r.intertwines);
    CHECK(r.lower);
  }
}

TEST_CASE("flag resolution of (P2, alpha gamma beta) is quasi-isomorphic and lower triangular") {
  auto A = cycle3(Field::prime(5));
  const RepComplex M = evaluate(p2_example(A));
  const FlagWitness w = flag_resolution(M);
  CHECK(w.lower);
  CHECK(w.quasi_iso);
  CHECK(strictly_lower(w.flag, w.block));
  const RelProjFlag r = relproj_to_flag(p2_example(A));
  CHECK(iso_cn(w.flag, r.Qprime).search.verdict == Verdict::Yes);
}

TEST_CASE("strictly_lower rejects diagonal and upward entries") {
  auto A = cycle3(Field::prime(3));
  const ProjModule P = proj(A, {"1", "2"});
  const Graded X = make_graded(A, 1, P, {0, 0}, map(A, P, P, {{"0", "0"}, {"alpha", "0"}}));
  CHECK(strictly_lower(X, {0, 1}));
  CHECK_FALSE(strictly_lower(X, {0, 0}));
  CHECK_FALSE(strictly_lower(X, {1, 0}));
  CHECK_FALSE(strictly_lower(X, {0}));
}

TEST_CASE("flag resolutions of random differential modules") {
  std::size_t runs = 0;
  for (Field F : {Field::prime(3), Field::prime(5)}) {
    Rng rng(7 + F.characteristic());
    for (auto A : suite_algebras(F)) {
      for (int t = 0; t < 9; ++t) {
        const RepComplex M = random_dm(A, rng);
        const FlagWitness w = flag_resolution(M);
        CHECK(w.lower);
        CHECK(w.quasi_iso);
        CHECK(is_chain_map(evaluate(w.flag), M, {w.augmentation}));
        ++runs;
      }
    }
  }
  CHECK(runs >= 50);
}

TEST_CASE("relative projectives become flags up to homotopy") {
  std::size_t runs = 0;
  for (Field F : {Field::prime(3), Field::prime(5)}) {
    Rng rng(11 + F.characteristic());
    for (auto A : suite_algebras(F)) {
      for (int t = 0; t < 9; ++t) {
        const PeriodicComplex P = random_relproj(A, rng);
        const RelProjFlag r = relproj_to_flag(P);
        CHECK(r.homotopy_identity);
        CHECK(r.intertwines);
        CHECK(r.f.is_invertible());
        CHECK(r.lower);
        CHECK(iso_cn(r.Qprime, P).search.verdict == Verdict::Yes);
        ++runs;
      }
    }
  }
  CHECK(runs >= 50);
}

TEST_CASE("hereditary stalk check") {
  Rng rng(5);
  auto A = linear3(Field::prime(3));
  for (int t = 0; t < 10; ++t) {
    const RepComplex M = random_dm(A, rng);
    CHECK(hereditary_stalk_check(M).holds);
  }
  auto B = cycle3(Field::prime(3));
  CHECK_THROWS_AS(hereditary_stalk_check(evaluate(p2_example(B))), Error);
}
