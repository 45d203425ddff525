#pragma once

// Finitely generated projective modules P_{v_1} + ... + P_{v_k} and the
// morphisms between them, stored as matrices of algebra elements.
// Entry (j, i) of f: P -> Q lies in e_{w_j} Lambda e_{v_i}.

#include "pcx/algebra.hpp"
#include "pcx/matrix.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pcx {

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

struct ProjModule {
  std::vector<int> summands;  // vertex of each indecomposable summand

  std::size_t size() const noexcept { return summands.size(); }
  bool empty() const noexcept { return summands.empty(); }
  int operator[](std::size_t i) const { return summands[i]; }
  static ProjModule direct_sum(const ProjModule& a, const ProjModule& b);
  friend bool operator==(const ProjModule& a, const ProjModule& b) { return a.summands == b.summands; }
  friend bool operator!=(const ProjModule& a, const ProjModule& b) { return !(a == b); }
  std::string to_string(const PathAlgebra& A) const;
};

class ProjMap {
 public:
  ProjMap() = default;
  /// The zero map.
  ProjMap(AlgebraPtr A, ProjModule source, ProjModule target);
  static ProjMap identity(AlgebraPtr A, const ProjModule& P);
  /// Single-entry map with `e` at (row, col).
  static ProjMap single(AlgebraPtr A, ProjModule source, ProjModule target, std::size_t row, std::size_t col,
                        Element e);

  const AlgebraPtr& algebra() const noexcept { return A_; }
  const ProjModule& source() const noexcept { return source_; }
  const ProjModule& target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return target_.size(); }
  std::size_t cols() const noexcept { return source_.size(); }

  const Element& operator()(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
  /// Sets an entry after checking it lies in e_{w_row} Lambda e_{v_col}.
  void set(std::size_t row, std::size_t col, Element e);

  bool is_zero() const;
  /// No entry has a nonzero coefficient on a trivial path.
  bool is_radical() const;
  /// Coefficients on trivial paths: the induced map on tops, rows x cols over the field.
  Matrix top_matrix() const;
  /// Square with invertible top matrix (projective covers are local).
  bool is_invertible() const;

  /// Sub-matrix on the given target rows and source columns.
  ProjMap restrict(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Places `b` at (row0, col0); the summands must agree.
  void set_block(std::size_t row0, std::size_t col0, const ProjMap& b);

  ProjMap operator-() const;
  ProjMap& operator+=(const ProjMap& o);
  ProjMap& operator-=(const ProjMap& o);
  ProjMap scaled(const Scalar& s) const;
  friend ProjMap operator+(ProjMap a, const ProjMap& b) { return a += b; }
  friend ProjMap operator-(ProjMap a, const ProjMap& b) { return a -= b; }
  /// Composition g * f = g after f.
  friend ProjMap operator*(const ProjMap& g, const ProjMap& f);
  friend bool operator==(const ProjMap& a, const ProjMap& b);
  friend bool operator!=(const ProjMap& a, const ProjMap& b) { return !(a == b); }

  std::string to_string() const;
  std::vector<std::vector<std::string>> words() const;

 private:
  AlgebraPtr A_;
  ProjModule source_, target_;
  std::vector<Element> entries_;
};

/// Block-diagonal sum f + g.
ProjMap direct_sum(const ProjMap& f, const ProjMap& g);
/// Two-sided inverse, if f is an isomorphism.
std::optional<ProjMap> inverse(const ProjMap& f);

/// Coordinates on Hom(P, Q): one coordinate per (row, col, basis path) with the
/// path running from the source summand to the target summand. An optional
/// mask restricts the allowed (row, col) entries.
class HomCoords {
 public:
  struct Coord {
    std::size_t row, col, path;
  };
  using Mask = std::function<bool(std::size_t row, std::size_t col)>;

  HomCoords() = default;
  HomCoords(AlgebraPtr A, ProjModule source, ProjModule target, const Mask& mask = {});

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<Coord>& coords() const noexcept { return coords_; }
  const ProjModule& source() const noexcept { return source_; }
  const ProjModule& target() const noexcept { return target_; }
  const AlgebraPtr& algebra() const noexcept { return A_; }

  /// Writes the coordinates of f into column `col` of out, starting at row `offset`.
  /// Throws if f has support outside the mask.
  void write(const ProjMap& f, Matrix& out, std::size_t offset = 0, std::size_t col = 0) const;
  Matrix to_vector(const ProjMap& f) const;
  ProjMap from_vector(const Matrix& v, std::size_t offset = 0, std::size_t col = 0) const;
  ProjMap basis_map(std::size_t k) const;
  ProjMap zero() const { return ProjMap(A_, source_, target_); }

 private:
  AlgebraPtr A_;
  ProjModule source_, target_;
  std::vector<Coord> coords_;
  std::vector<std::size_t> entry_offset_;  // first coord index of each (row, col), or npos
  std::vector<bool> allowed_;
};

/// Concatenated coordinates of several Hom spaces.
class CoordSpace {
 public:
  explicit CoordSpace(std::vector<HomCoords> blocks);
  std::size_t dim() const noexcept { return dim_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const HomCoords& block(std::size_t b) const { return blocks_[b]; }
  std::size_t offset(std::size_t b) const { return offsets_[b]; }
  Field field() const;

  Matrix to_vector(const std::vector<ProjMap>& maps) const;
  std::vector<ProjMap> from_vector(const Matrix& v, std::size_t col = 0) const;
  std::vector<ProjMap> basis_maps(std::size_t k) const;

 private:
  std::vector<HomCoords> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

using LinearFn = std::function<std::vector<ProjMap>(const std::vector<ProjMap>&)>;

/// Matrix of a linear map between coordinate spaces, built column by column
/// from the images of basis vectors. `fn` must be pure; columns are filled in parallel.
Matrix linear_operator(const CoordSpace& domain, const CoordSpace& codomain, const LinearFn& fn);

namespace serial {
Matrix linear_operator(const CoordSpace& domain, const CoordSpace& codomain, const LinearFn& fn);
}

}  // namespace pcx
