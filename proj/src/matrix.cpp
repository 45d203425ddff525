#include "pcx/matrix.hpp"

#include "pcx/error.hpp"

#include <sstream>

namespace pcx {

namespace {

// Below this many scalar updates a kernel stays on one thread.
constexpr std::size_t kParallelWork = 1u << 14;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

// Reduce m in place to RREF, choosing pivots only among the first `pivot_cols`
// columns. Leftmost nonzero column, topmost row. Returns pivot columns.
template <bool Parallel>
std::vector<std::size_t> reduce(Matrix& m, std::size_t pivot_cols) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;

    const long long nrows = static_cast<long long>(rows);
    const bool wide = Parallel && rows * (cols - c) > kParallelWork;
#pragma omp parallel for schedule(static) if (wide)
    for (long long ii = 0; ii < nrows; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <bool Parallel>
RrefResult rref_impl(const Matrix& a) {
  Matrix aug = Matrix::hstack(a, Matrix::identity(a.field(), a.rows()));
  auto pivots = reduce<Parallel>(aug, a.cols());
  return RrefResult{aug.block(0, 0, a.rows(), a.cols()), std::move(pivots),
                    aug.block(0, a.cols(), a.rows(), a.rows())};
}

template <bool Parallel>
Matrix multiply_impl(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
  require(a.field() == b.field(), "matrix product: fields differ");
  Matrix c(a.field(), a.rows(), b.cols());
  const long long n = static_cast<long long>(a.rows());
  const bool wide = Parallel && a.rows() * a.cols() * b.cols() > kParallelWork;
#pragma omp parallel for schedule(static) if (wide)
  for (long long ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == nc, "ragged matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_, "set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix s(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) s(i, k) = (*this)(i, cols[k]);
  return s;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "hstack: row counts differ");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "vstack: column counts differ");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply_impl<true>(a, b); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& a) { return rref_impl<true>(a); }

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return reduce<true>(m, m.cols()).size();
}

Matrix nullspace(const Matrix& a) {
  Matrix m = a;
  const auto pivots = reduce<true>(m, m.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(a.field(), a.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = a.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free[k]);
  }
  return basis;
}

std::optional<Solution> solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "solve: A and b row counts differ");
  Matrix aug = Matrix::hstack(a, b);
  const auto pivots = reduce<true>(aug, a.cols());
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!aug(r, a.cols() + j).is_zero()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return Solution{std::move(x), nullspace(a)};
}

std::optional<Matrix> inverse(const Matrix& a) {
  require(a.rows() == a.cols(), "inverse: matrix not square");
  auto r = rref(a);
  if (r.rank() != a.rows()) return std::nullopt;
  return r.transform;
}

Scalar determinant(const Matrix& a) {
  require(a.rows() == a.cols(), "determinant: matrix not square");
  Matrix m = a;
  const std::size_t n = m.rows();
  Scalar det = a.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return a.field().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<std::size_t> independent_columns(const Matrix& a) {
  Matrix m = a;
  return reduce<true>(m, m.cols());
}

std::vector<std::size_t> extend_basis(const Matrix& a, const Matrix& b) {
  Matrix m = Matrix::hstack(a, b);
  std::vector<std::size_t> out;
  for (auto c : reduce<true>(m, m.cols()))
    if (c >= a.cols()) out.push_back(c - a.cols());
  return out;
}

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b) { return multiply_impl<false>(a, b); }
RrefResult rref(const Matrix& a) { return rref_impl<false>(a); }
}  // namespace serial

}  // namespace pcx
