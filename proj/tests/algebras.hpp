#pragma once

// Algebras used across the test suites.

#include "pcx/algebra.hpp"
#include "pcx/projective.hpp"

#include <memory>
#include <string>
#include <vector>

namespace testalg {

using namespace pcx;

inline Quiver cycle_quiver(int n) {
  static const char* names[] = {"alpha", "beta", "gamma", "delta", "eps", "zeta"};
  Quiver q;
  for (int v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
  for (int v = 0; v < n; ++v) q.add_arrow(names[v], v, (v + 1) % n);
  return q;
}

inline AlgebraPtr make(Quiver q, const std::vector<std::string>& relations, Field f) {
  std::vector<Word> rel;
  for (const auto& r : relations) rel.push_back(parse_word(q, r));
  return std::make_shared<const PathAlgebra>(PathAlgebra::build(std::move(q), std::move(rel), f));
}

// 1 -alpha-> 2 -beta-> 3 -gamma-> 1 modulo beta*alpha
inline AlgebraPtr cycle3(Field f) { return make(cycle_quiver(3), {"beta*alpha"}, f); }

// 1 -alpha-> 2 -beta-> 3 -gamma-> 4 -delta-> 1 modulo beta*alpha, delta*gamma
inline AlgebraPtr cycle4_two(Field f) { return make(cycle_quiver(4), {"beta*alpha", "delta*gamma"}, f); }

// the same quiver modulo gamma*beta*alpha
inline AlgebraPtr cycle4_long(Field f) { return make(cycle_quiver(4), {"gamma*beta*alpha"}, f); }

// alpha: 1 -> 2, beta: 2 -> 3, gamma: 1 -> 3 modulo beta*alpha
inline AlgebraPtr triangle(Field f) {
  Quiver q;
  for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
  q.add_arrow("alpha", 0, 1);
  q.add_arrow("beta", 1, 2);
  q.add_arrow("gamma", 0, 2);
  return make(std::move(q), {"beta*alpha"}, f);
}

// A_3 linear quiver without relations (hereditary)
inline AlgebraPtr linear3(Field f) {
  Quiver q;
  for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
  q.add_arrow("alpha", 0, 1);
  q.add_arrow("beta", 1, 2);
  return make(std::move(q), {}, f);
}

inline Element path(const AlgebraPtr& A, const std::string& word) {
  return path_element(*A, parse_word(A->quiver(), word));
}

inline int vertex(const AlgebraPtr& A, const std::string& name) { return *A->quiver().find_vertex(name); }

inline ProjModule proj(const AlgebraPtr& A, const std::vector<std::string>& names) {
  ProjModule P;
  for (const auto& n : names) P.summands.push_back(vertex(A, n));
  return P;
}

/// Map between projectives from a grid of element strings ("0", "1", "alpha", "-gamma*beta").
inline ProjMap map(const AlgebraPtr& A, const ProjModule& src, const ProjModule& tgt,
                   const std::vector<std::vector<std::string>>& grid) {
  ProjMap f(A, src, tgt);
  for (std::size_t j = 0; j < grid.size(); ++j)
    for (std::size_t i = 0; i < grid[j].size(); ++i) f.set(j, i, parse_element(*A, grid[j][i], src[i], tgt[j]));
  return f;
}

inline std::vector<AlgebraPtr> example_algebras(Field f) {
  return {cycle3(f), cycle4_two(f), cycle4_long(f)};
}

/// A_3, the 3-cycle modulo beta*alpha and the 4-cycle modulo beta*alpha, delta*gamma.
inline std::vector<AlgebraPtr> suite_algebras(Field f) { return {linear3(f), cycle3(f), cycle4_two(f)}; }

}  // namespace testalg
