#include "algebras.hpp"
#include "pcx/error.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace pcx;
using namespace testalg;

namespace {

// All composable words of length <= L avoiding the relations, by blind enumeration.
std::set<Word> brute_paths(const PathAlgebra& A, std::size_t L) {
  const Quiver& Q = A.quiver();
  std::set<Word> out;
  std::vector<Word> layer{{}};
  for (std::size_t len = 1; len <= L; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int a = 0; a < Q.arrow_count(); ++a) {
        Word x = w;
        x.push_back(a);  // appended on the right: applied first
        bool ok = true;
        for (std::size_t k = 0; k + 1 < x.size(); ++k)
          if (Q.arrow(x[k + 1]).target != Q.arrow(x[k]).source) ok = false;
        if (!ok) continue;
        std::string s = "/";
        for (int y : x) s += std::to_string(y) + "/";
        for (const auto& r : A.relations()) {
          std::string rs = "/";
          for (int y : r) rs += std::to_string(y) + "/";
          if (s.find(rs) != std::string::npos) ok = false;
        }
        if (!ok) continue;
        out.insert(x);
        next.push_back(x);
      }
    layer = std::move(next);
  }
  return out;
}

std::set<Word> algebra_paths(const PathAlgebra& A) {
  std::set<Word> out;
  for (std::size_t i = A.vertex_count(); i < A.dim(); ++i) out.insert(A.path(i).word);
  return out;
}

}  // namespace

TEST_CASE("three-cycle modulo beta*alpha") {
  auto A = cycle3(Field::rationals());
  CHECK(A->dim() == 9);
  CHECK(algebra_paths(*A) == brute_paths(*A, 8));
  std::set<std::string> names;
  for (std::size_t i = 0; i < A->dim(); ++i) names.insert(A->word_string(i));
  CHECK(names == std::set<std::string>{"e1", "e2", "e3", "alpha", "beta", "gamma", "alpha*gamma", "gamma*beta",
                                       "alpha*gamma*beta"});
  CHECK(multiply(*A, path(A, "beta"), path(A, "alpha")).is_zero());
  CHECK(multiply(*A, path(A, "alpha"), path(A, "gamma")) == path(A, "alpha*gamma"));
  const int v2 = vertex(A, "2");
  CHECK(multiply(*A, unit_at(*A, v2), path(A, "alpha")) == path(A, "alpha"));
  auto h = A->hom_basis(vertex(A, "1"), v2);
  REQUIRE(h.size() == 1);
  CHECK(A->word_string(h[0]) == "alpha");
}

TEST_CASE("four-cycle modulo beta*alpha and delta*gamma") {
  auto A = cycle4_two(Field::prime(5));
  CHECK(A->dim() == 10);
  CHECK(algebra_paths(*A) == brute_paths(*A, 10));
  std::set<std::string> len2;
  for (std::size_t i = 0; i < A->dim(); ++i)
    if (A->path(i).length() == 2) len2.insert(A->word_string(i));
  CHECK(len2 == std::set<std::string>{"gamma*beta", "alpha*delta"});
}

TEST_CASE("four-cycle modulo gamma*beta*alpha agrees with enumeration") {
  auto A = cycle4_long(Field::prime(5));
  CHECK(algebra_paths(*A) == brute_paths(*A, 14));
}

TEST_CASE("single vertex and triangle") {
  Quiver q;
  q.add_vertex("1");
  auto A = std::make_shared<const PathAlgebra>(PathAlgebra::build(q, {}, Field::prime(2)));
  CHECK(A->dim() == 1);
  auto T = triangle(Field::rationals());
  CHECK(T->hom_basis(vertex(T, "3"), vertex(T, "2")).empty());
  CHECK(T->hom_basis(vertex(T, "1"), vertex(T, "3")).size() == 1);
}

TEST_CASE("infinite-dimensional algebras are rejected") {
  CHECK_THROWS_AS(PathAlgebra::build(cycle_quiver(3), {}, Field::prime(3)), Error);
  try {
    PathAlgebra::build(cycle_quiver(2), {}, Field::prime(3), 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFiniteDimensional);
  }
}

TEST_CASE("algebra axioms on random elements") {
  std::mt19937_64 rng(1);
  for (auto A : example_algebras(Field::prime(7))) {
    auto random_element = [&] {
      Element e;
      for (std::size_t i = 0; i < A->dim(); ++i)
        if (rng() % 3 == 0) e += Element::basis(i, A->field().from_int(1 + rng() % 6));
      return e;
    };
    for (int t = 0; t < 1000; ++t) {
      auto a = random_element(), b = random_element(), c = random_element();
      CHECK(multiply(*A, multiply(*A, a, b), c) == multiply(*A, a, multiply(*A, b, c)));
    }
    Element one;
    for (int v = 0; v < A->vertex_count(); ++v) one += unit_at(*A, v);
    std::size_t total = 0;
    for (std::size_t i = 0; i < A->dim(); ++i) {
      auto p = Element::basis(i, A->field().one());
      CHECK(multiply(*A, one, p) == p);
      CHECK(multiply(*A, p, one) == p);
    }
    for (int v = 0; v < A->vertex_count(); ++v)
      for (int w = 0; w < A->vertex_count(); ++w) total += A->hom_basis(v, w).size();
    CHECK(total == A->dim());
  }
}

TEST_CASE("element parsing and printing") {
  auto A = cycle3(Field::prime(5));
  const int v1 = vertex(A, "1"), v2 = vertex(A, "2");
  CHECK(parse_element(*A, "-alpha", v1, v2).to_string(*A) == "-alpha");
  CHECK(parse_element(*A, "2*alpha", v1, v2) == path(A, "alpha").scaled(A->field().from_int(2)));
  CHECK(parse_element(*A, "1", v2, v2) == unit_at(*A, v2));
  CHECK(parse_element(*A, "1 - alpha*gamma*beta", v2, v2).to_string(*A) == "1 - alpha*gamma*beta");
  CHECK(parse_element(*A, "0", v1, v2).is_zero());
  CHECK_THROWS_AS(parse_element(*A, "beta", v1, v2), Error);
  CHECK_THROWS_AS(parse_element(*A, "1", v1, v2), Error);
  CHECK_THROWS_AS(parse_element(*A, "omega", v1, v2), Error);
}
