#pragma once

// Path algebras kG/I of finite quivers modulo monomial relations.
//
// Composition convention: a word is written in composition order, so the
// word "b*a" (b after a) means "first a, then b". For a: 1 -> 2 and
// b: 2 -> 3 the word "b*a" is the path 1 -> 3. Relations use the same order.
//
// Modules are right modules. P_v = e_v Lambda is spanned by the paths ending
// at v, and Hom(P_v, P_w) = e_w Lambda e_v (paths from v to w) acting by left
// multiplication.

#include "pcx/field.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcx {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  int add_vertex(std::string name);
  int add_arrow(std::string name, int source, int target);

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_arrow(std::string_view name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Arrow indices in composition order: word.front() is applied last.
using Word = std::vector<int>;

struct Path {
  int source = 0;
  int target = 0;
  Word word;  // empty for the trivial path e_source
  std::size_t length() const noexcept { return word.size(); }
};

class PathAlgebra {
 public:
  /// Enumerates the nonzero paths. Throws NOT_FINITE_DIMENSIONAL if a
  /// relation-free path of length length_bound + 1 exists.
  static PathAlgebra build(Quiver quiver, std::vector<Word> relations, Field field,
                           std::optional<std::size_t> length_bound = std::nullopt);

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Word>& relations() const noexcept { return relations_; }
  const Field& field() const noexcept { return field_; }
  std::size_t length_bound() const noexcept { return length_bound_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  int vertex_count() const noexcept { return quiver_.vertex_count(); }

  const Path& path(std::size_t i) const { return basis_.at(i); }
  std::size_t idempotent(int v) const { return static_cast<std::size_t>(v); }
  /// Basis index of a relation-free composable word, nullopt if the word is zero in the algebra.
  std::optional<std::size_t> index_of(const Word& w) const;
  /// Index of b_i * b_j (b_i after b_j), or -1 when the product vanishes.
  int product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }
  /// Paths from v to w, i.e. a basis of e_w Lambda e_v.
  const std::vector<std::size_t>& hom_basis(int v, int w) const {
    return hom_[static_cast<std::size_t>(w) * quiver_.vertex_count() + v];
  }
  bool contains_relation(const Word& w) const;
  bool is_hereditary() const noexcept { return relations_.empty(); }
  std::string word_string(std::size_t i) const;
  std::string word_string(const Word& w) const;

  /// Same algebra over a different field.
  PathAlgebra with_field(Field f) const;

 private:
  Quiver quiver_;
  std::vector<Word> relations_;
  Field field_;
  std::size_t length_bound_ = 0;
  std::vector<Path> basis_;
  std::vector<int> table_;
  std::vector<std::vector<std::size_t>> hom_;
};

/// Sparse linear combination of basis paths, sorted by index, no zero coefficients.
class Element {
 public:
  Element() = default;
  static Element basis(std::size_t index, Scalar coeff);

  const std::vector<std::pair<std::size_t, Scalar>>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of basis path i (nullopt when absent).
  std::optional<Scalar> coefficient(std::size_t i) const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element scaled(const Scalar& s) const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string to_string(const PathAlgebra& A) const;

 private:
  std::vector<std::pair<std::size_t, Scalar>> terms_;
};

Element multiply(const PathAlgebra& A, const Element& a, const Element& b);
/// e_v
Element unit_at(const PathAlgebra& A, int v);
/// Path by word; zero element if the word contains a relation.
Element path_element(const PathAlgebra& A, const Word& w);

/// Parses "a*g*b", "-1*b", "2*a + b", "1" (= e_v when source == target), "0", "e2".
/// The result must lie in e_target Lambda e_source.
Element parse_element(const PathAlgebra& A, std::string_view text, int source, int target);
Word parse_word(const Quiver& Q, std::string_view text);

}  // namespace pcx
