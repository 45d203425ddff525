#include "algebras.hpp"
#include "oracles.hpp"
#include "pcx/bounded.hpp"
#include "pcx/error.hpp"
#include "random_objects.hpp"

#include <doctest.h>

#include <cstdint>

using namespace pcx;
using namespace testalg;
using namespace testrand;

namespace {

void check_witnesses(const Graded& X, const Minimization& m) {
  CHECK(is_minimal(m.min));
  CHECK(is_chain_map(X, m.min, m.f));
  CHECK(is_chain_map(m.min, X, m.g));
  CHECK(m.f * m.g == ProjMap::identity(X.A, m.min.module));
  CHECK(has_degree(X, X, m.s, -1));
  CHECK(homotopy_defect(X, X, m.g * m.f - ProjMap::identity(X.A, X.module), m.s).is_zero());
}

}  // namespace

TEST_CASE("cone of the identity on a stalk") {
  auto A = cycle3(Field::prime(5));
  const BoundedComplex X = stalk(A, proj(A, {"2"}));
  const ChainMap id{X, X, 0, ProjMap::identity(A, X.module)};
  const BoundedComplex C = cone_bounded(id);
  CHECK(C.module == proj(A, {"2", "2"}));
  CHECK(C.degree == std::vector<int>{-1, 0});
  CHECK(C.d == map(A, C.module, C.module, {{"0", "0"}, {"1", "0"}}));
  const auto s = null_homotopy(C, C, ProjMap::identity(A, C.module));
  REQUIRE(s);
  CHECK(*s == map(A, C.module, C.module, {{"0", "1"}, {"0", "0"}}));
  const Minimization m = minimize_bounded(C);
  CHECK(m.min.empty());
  check_witnesses(C, m);
}

TEST_CASE("cone of zero is the shifted sum") {
  auto A = cycle3(Field::rationals());
  const ProjModule P1 = proj(A, {"1"}), P2 = proj(A, {"2"});
  const BoundedComplex X = make_bounded(A, 0, {P1, P2}, {map(A, P1, P2, {{"alpha"}})});
  const ChainMap z{X, X, 0, ProjMap(A, X.module, X.module)};
  CHECK(cone_bounded(z).d == direct_sum(shift(X), X).d);
  CHECK(cone_bounded(z).degree == direct_sum(shift(X), X).degree);
}

TEST_CASE("chain maps into shifts are validated") {
  auto A = cycle3(Field::prime(3));
  const BoundedComplex X = stalk(A, proj(A, {"1"}));
  const BoundedComplex Y = stalk(A, proj(A, {"2"}), 1);
  const ChainMap f{X, Y, 1, map(A, X.module, Y.module, {{"alpha"}})};
  CHECK(f.is_valid());
  const BoundedComplex C = cone_bounded(f);
  CHECK(C.degree == std::vector<int>{-1, 0});
  const ChainMap bad{X, Y, 0, map(A, X.module, Y.module, {{"alpha"}})};
  CHECK_FALSE(bad.is_valid());
  CHECK_THROWS_AS(cone_bounded(bad), Error);
}

TEST_CASE("minimal input is unchanged and minimization is idempotent") {
  auto A = cycle4_two(Field::prime(5));
  const ProjModule P1 = proj(A, {"1"}), P2 = proj(A, {"2"});
  const BoundedComplex X = make_bounded(A, 0, {P1, P2}, {map(A, P1, P2, {{"alpha"}})});
  const Minimization m = minimize_bounded(X);
  CHECK(m.steps == 0);
  CHECK(m.min.d == X.d);
  CHECK(m.f == ProjMap::identity(A, X.module));

  Rng rng(3);
  for (auto B : suite_algebras(Field::prime(3))) {
    for (int t = 0; t < 20; ++t) {
      const BoundedComplex Y = random_bounded(B, rng);
      const Minimization m1 = minimize_bounded(Y);
      check_witnesses(Y, m1);
      const Minimization m2 = minimize_bounded(m1.min);
      CHECK(m2.steps == 0);
      CHECK(m2.min.module == m1.min.module);
      CHECK(m2.min.d == m1.min.d);
    }
  }
}

TEST_CASE("minimization witnesses on conjugated differential modules") {
  for (Field F : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    Rng rng(19 + F.characteristic());
    for (auto A : suite_algebras(F)) {
      for (int t = 0; t < 10; ++t) {
        const PeriodicComplex P = random_relproj(A, rng);
        check_witnesses(P, minimize(P));
      }
    }
  }
}

TEST_CASE("Hom in the bounded homotopy category") {
  auto A = cycle4_two(Field::prime(5));
  for (int v = 0; v < A->vertex_count(); ++v) {
    const ProjModule P{{v}};
    const BoundedComplex X = stalk(A, P);
    CHECK(hom_kb(X, X, 0).dim == A->hom_basis(v, v).size());
    CHECK(hom_kb(X, X, 1).dim == 0);
    CHECK(hom_kb(X, X, -2).dim == 0);
  }
  const auto S1 = Representation::simple(A, vertex(A, "1"));
  const auto S3 = Representation::simple(A, vertex(A, "3"));
  const BoundedComplex R1 = from_resolution(A, proj_resolution(S1));
  const BoundedComplex R3 = from_resolution(A, proj_resolution(S3));
  CHECK(hom_kb(R1, R3, 2).dim == 1);
  CHECK(hom_kb(R1, R3, 1).dim == 0);
  CHECK(ext_basis(S1, S3, 2).basis.size() == 1);
  CHECK(ext_basis(S3, S1, 2).basis.size() == 1);
}

TEST_CASE("hom_kb is invariant under minimization") {
  Rng rng(23);
  for (auto A : suite_algebras(Field::prime(3))) {
    for (int t = 0; t < 12; ++t) {
      const BoundedComplex X = random_bounded(A, rng), Y = random_bounded(A, rng);
      const Graded Xm = minimize_bounded(X).min, Ym = minimize_bounded(Y).min;
      for (int l = -2; l <= 2; ++l) CHECK(hom_kb(X, Y, l).dim == hom_kb(Xm, Ym, l).dim);
    }
  }
}

TEST_CASE("null_homotopy agrees with exhaustive search") {
  std::size_t compared = 0, homotopic = 0;
  for (Field F : {Field::prime(2), Field::prime(3)}) {
    Rng rng(29 + F.characteristic());
    for (auto A : suite_algebras(F)) {
      for (int t = 0; t < 40; ++t) {
        Graded X, Y;
        if (t % 2 == 0) {
          X = random_bounded(A, rng, 2, 2);
          Y = random_bounded(A, rng, 2, 2);
        } else {
          X = random_relproj(A, rng);
          Y = random_relproj(A, rng);
        }
        if (map_coords(X, Y, -1).dim() > 12) continue;
        const ProjMap f = random_chain_map(X, Y, rng);
        const auto s = null_homotopy(X, Y, f);
        if (s) CHECK(homotopy_defect(X, Y, f, *s).is_zero());
        CHECK(s.has_value() == brute_force_homotopic(X, Y, f));
        homotopic += s.has_value();
        ++compared;
      }
    }
  }
  CHECK(compared >= 100);
  CHECK(homotopic > 0);
  CHECK(homotopic < compared);
  MESSAGE(compared, " compared, ", homotopic, " null-homotopic");
}

TEST_CASE("parallel Hom operator assembly matches the serial reference") {
  Rng rng(41);
  for (const Field F : {Field::prime(3), Field::rationals()})
    for (const auto& A : suite_algebras(F))
      for (int trial = 0; trial < 10; ++trial) {
        const ProjModule P = random_proj(A, rng, 4), Q = random_proj(A, rng, 4);
        const ProjMap g = random_projmap(A, Q, P, rng), h = random_projmap(A, Q, Q, rng);
        const CoordSpace dom({HomCoords(A, P, Q)}), cod({HomCoords(A, P, P), HomCoords(A, P, Q)});
        const LinearFn fn = [&](const std::vector<ProjMap>& x) { return std::vector<ProjMap>{g * x[0], h * x[0]}; };
        CHECK(linear_operator(dom, cod, fn) == serial::linear_operator(dom, cod, fn));
      }
}
