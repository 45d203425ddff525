#include "pcx/projective.hpp"

#include "pcx/error.hpp"

#include <exception>
#include <sstream>

namespace pcx {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

bool lies_in(const PathAlgebra& A, const Element& e, int source, int target) {
  for (const auto& [i, c] : e.terms()) {
    const Path& p = A.path(i);
    if (p.source != source || p.target != target) return false;
  }
  return true;
}

}  // namespace

ProjModule ProjModule::direct_sum(const ProjModule& a, const ProjModule& b) {
  ProjModule s = a;
  s.summands.insert(s.summands.end(), b.summands.begin(), b.summands.end());
  return s;
}

std::string ProjModule::to_string(const PathAlgebra& A) const {
  if (summands.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) out += " + ";
    out += "P" + A.quiver().vertex_name(summands[i]);
  }
  return out;
}

ProjMap::ProjMap(AlgebraPtr A, ProjModule source, ProjModule target)
    : A_(std::move(A)), source_(std::move(source)), target_(std::move(target)),
      entries_(source_.size() * target_.size()) {}

ProjMap ProjMap::identity(AlgebraPtr A, const ProjModule& P) {
  ProjMap m(A, P, P);
  for (std::size_t i = 0; i < P.size(); ++i) m.entries_[i * P.size() + i] = unit_at(*A, P[i]);
  return m;
}

ProjMap ProjMap::single(AlgebraPtr A, ProjModule source, ProjModule target, std::size_t row, std::size_t col,
                        Element e) {
  ProjMap m(std::move(A), std::move(source), std::move(target));
  m.set(row, col, std::move(e));
  return m;
}

void ProjMap::set(std::size_t row, std::size_t col, Element e) {
  require(row < rows() && col < cols(), "map entry out of range");
  require(lies_in(*A_, e, source_[col], target_[row]), "map entry does not run between the summand vertices");
  entries_[row * cols() + col] = std::move(e);
}

bool ProjMap::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ProjMap::is_radical() const {
  for (std::size_t j = 0; j < rows(); ++j)
    for (std::size_t i = 0; i < cols(); ++i)
      if (source_[i] == target_[j] && (*this)(j, i).coefficient(A_->idempotent(source_[i]))) return false;
  return true;
}

Matrix ProjMap::top_matrix() const {
  Matrix t(A_->field(), rows(), cols());
  for (std::size_t j = 0; j < rows(); ++j)
    for (std::size_t i = 0; i < cols(); ++i)
      if (source_[i] == target_[j])
        if (auto c = (*this)(j, i).coefficient(A_->idempotent(source_[i]))) t(j, i) = *c;
  return t;
}

bool ProjMap::is_invertible() const {
  if (rows() != cols()) return false;
  return !determinant(top_matrix()).is_zero();
}

ProjMap ProjMap::restrict(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  ProjModule src, tgt;
  for (auto c : cs) src.summands.push_back(source_[c]);
  for (auto r : rs) tgt.summands.push_back(target_[r]);
  ProjMap m(A_, src, tgt);
  for (std::size_t j = 0; j < rs.size(); ++j)
    for (std::size_t i = 0; i < cs.size(); ++i) m.entries_[j * cs.size() + i] = (*this)(rs[j], cs[i]);
  return m;
}

void ProjMap::set_block(std::size_t row0, std::size_t col0, const ProjMap& b) {
  require(row0 + b.rows() <= rows() && col0 + b.cols() <= cols(), "block out of range");
  for (std::size_t i = 0; i < b.cols(); ++i) require(source_[col0 + i] == b.source_[i], "block source mismatch");
  for (std::size_t j = 0; j < b.rows(); ++j) require(target_[row0 + j] == b.target_[j], "block target mismatch");
  for (std::size_t j = 0; j < b.rows(); ++j)
    for (std::size_t i = 0; i < b.cols(); ++i) entries_[(row0 + j) * cols() + col0 + i] = b(j, i);
}

ProjMap ProjMap::operator-() const {
  ProjMap m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

ProjMap& ProjMap::operator+=(const ProjMap& o) {
  require(source_ == o.source_ && target_ == o.target_, "map sum: shapes differ");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

ProjMap& ProjMap::operator-=(const ProjMap& o) {
  require(source_ == o.source_ && target_ == o.target_, "map difference: shapes differ");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

ProjMap ProjMap::scaled(const Scalar& s) const {
  ProjMap m = *this;
  for (auto& e : m.entries_) e = e.scaled(s);
  return m;
}

ProjMap operator*(const ProjMap& g, const ProjMap& f) {
  require(g.source_ == f.target_, "composition: modules do not match");
  const AlgebraPtr& A = g.A_ ? g.A_ : f.A_;
  ProjMap h(A, f.source_, g.target_);
  for (std::size_t k = 0; k < g.rows(); ++k)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Element& gkj = g(k, j);
      if (gkj.is_zero()) continue;
      for (std::size_t i = 0; i < f.cols(); ++i) {
        const Element& fji = f(j, i);
        if (!fji.is_zero()) h.entries_[k * h.cols() + i] += multiply(*A, gkj, fji);
      }
    }
  return h;
}

bool operator==(const ProjMap& a, const ProjMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.entries_ == b.entries_;
}

std::vector<std::vector<std::string>> ProjMap::words() const {
  std::vector<std::vector<std::string>> out(rows(), std::vector<std::string>(cols()));
  for (std::size_t j = 0; j < rows(); ++j)
    for (std::size_t i = 0; i < cols(); ++i) out[j][i] = (*this)(j, i).to_string(*A_);
  return out;
}

std::string ProjMap::to_string() const {
  std::ostringstream os;
  os << "[";
  const auto w = words();
  for (std::size_t j = 0; j < w.size(); ++j) {
    os << (j ? ", [" : "[");
    for (std::size_t i = 0; i < w[j].size(); ++i) os << (i ? ", " : "") << w[j][i];
    os << "]";
  }
  os << "]";
  return os.str();
}

ProjMap direct_sum(const ProjMap& f, const ProjMap& g) {
  const AlgebraPtr& A = f.algebra() ? f.algebra() : g.algebra();
  ProjMap s(A, ProjModule::direct_sum(f.source(), g.source()), ProjModule::direct_sum(f.target(), g.target()));
  s.set_block(0, 0, f);
  s.set_block(f.rows(), f.cols(), g);
  return s;
}

std::optional<ProjMap> inverse(const ProjMap& f) {
  if (!f.is_invertible()) return std::nullopt;
  const AlgebraPtr& A = f.algebra();
  // Solve g * f = 1 for g: Q -> P.
  CoordSpace dom({HomCoords(A, f.target(), f.source())});
  CoordSpace cod({HomCoords(A, f.source(), f.source())});
  const Matrix op = linear_operator(dom, cod, [&f](const std::vector<ProjMap>& g) {
    return std::vector<ProjMap>{g[0] * f};
  });
  const Matrix rhs = cod.to_vector({ProjMap::identity(A, f.source())});
  auto sol = solve(op, rhs);
  if (!sol) return std::nullopt;
  return dom.from_vector(sol->particular)[0];
}

HomCoords::HomCoords(AlgebraPtr A, ProjModule source, ProjModule target, const Mask& mask)
    : A_(std::move(A)), source_(std::move(source)), target_(std::move(target)),
      entry_offset_(source_.size() * target_.size(), npos), allowed_(source_.size() * target_.size(), false) {
  for (std::size_t j = 0; j < target_.size(); ++j)
    for (std::size_t i = 0; i < source_.size(); ++i) {
      if (mask && !mask(j, i)) continue;
      allowed_[j * source_.size() + i] = true;
      const auto& paths = A_->hom_basis(source_[i], target_[j]);
      if (paths.empty()) continue;
      entry_offset_[j * source_.size() + i] = coords_.size();
      for (auto p : paths) coords_.push_back({j, i, p});
    }
}

void HomCoords::write(const ProjMap& f, Matrix& out, std::size_t offset, std::size_t col) const {
  require(f.source() == source_ && f.target() == target_, "coordinates: map has the wrong shape");
  for (std::size_t j = 0; j < target_.size(); ++j)
    for (std::size_t i = 0; i < source_.size(); ++i) {
      const Element& e = f(j, i);
      if (e.is_zero()) continue;
      const std::size_t k = j * source_.size() + i;
      require(allowed_[k], "coordinates: map has support outside the allowed entries");
      const auto& paths = A_->hom_basis(source_[i], target_[j]);
      for (const auto& [p, c] : e.terms()) {
        std::size_t t = 0;
        while (t < paths.size() && paths[t] != p) ++t;
        require(t < paths.size(), "coordinates: path outside the Hom space");
        out(offset + entry_offset_[k] + t, col) = c;
      }
    }
}

Matrix HomCoords::to_vector(const ProjMap& f) const {
  Matrix v(A_->field(), dim(), 1);
  write(f, v);
  return v;
}

ProjMap HomCoords::from_vector(const Matrix& v, std::size_t offset, std::size_t col) const {
  ProjMap f(A_, source_, target_);
  std::vector<Element> acc(source_.size() * target_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Scalar& c = v(offset + k, col);
    if (c.is_zero()) continue;
    acc[coords_[k].row * source_.size() + coords_[k].col] += Element::basis(coords_[k].path, c);
  }
  for (std::size_t j = 0; j < target_.size(); ++j)
    for (std::size_t i = 0; i < source_.size(); ++i)
      if (!acc[j * source_.size() + i].is_zero()) f.set(j, i, std::move(acc[j * source_.size() + i]));
  return f;
}

ProjMap HomCoords::basis_map(std::size_t k) const {
  const Coord& c = coords_.at(k);
  return ProjMap::single(A_, source_, target_, c.row, c.col, Element::basis(c.path, A_->field().one()));
}

CoordSpace::CoordSpace(std::vector<HomCoords> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    offsets_.push_back(dim_);
    dim_ += b.dim();
  }
}

Matrix CoordSpace::to_vector(const std::vector<ProjMap>& maps) const {
  require(maps.size() == blocks_.size(), "coordinates: wrong number of maps");
  Matrix v(field(), dim_, 1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b].write(maps[b], v, offsets_[b]);
  return v;
}

std::vector<ProjMap> CoordSpace::from_vector(const Matrix& v, std::size_t col) const {
  std::vector<ProjMap> out;
  out.reserve(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) out.push_back(blocks_[b].from_vector(v, offsets_[b], col));
  return out;
}

Field CoordSpace::field() const {
  return blocks_.empty() ? Field::rationals() : blocks_.front().algebra()->field();
}

std::vector<ProjMap> CoordSpace::basis_maps(std::size_t k) const {
  std::vector<ProjMap> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& hb = blocks_[b];
    if (k >= offsets_[b] && k < offsets_[b] + hb.dim())
      out.push_back(hb.basis_map(k - offsets_[b]));
    else
      out.push_back(hb.zero());
  }
  return out;
}

namespace {

template <bool Parallel>
Matrix linear_operator_impl(const CoordSpace& domain, const CoordSpace& codomain, const LinearFn& fn) {
  Matrix m(codomain.block_count() ? codomain.field() : domain.field(), codomain.dim(), domain.dim());
  const long long n = static_cast<long long>(domain.dim());
  std::exception_ptr failure;
  // Columns are disjoint, so threads never write the same entry.
#pragma omp parallel for schedule(dynamic) if (Parallel && n > 8)
  for (long long kk = 0; kk < n; ++kk) {
    try {
      const auto k = static_cast<std::size_t>(kk);
      const auto image = fn(domain.basis_maps(k));
      require(image.size() == codomain.block_count(), "linear operator: wrong number of image maps");
      for (std::size_t b = 0; b < image.size(); ++b) codomain.block(b).write(image[b], m, codomain.offset(b), k);
    } catch (...) {
#pragma omp critical(pcx_linear_operator)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

}  // namespace

Matrix linear_operator(const CoordSpace& domain, const CoordSpace& codomain, const LinearFn& fn) {
  return linear_operator_impl<true>(domain, codomain, fn);
}

namespace serial {
Matrix linear_operator(const CoordSpace& domain, const CoordSpace& codomain, const LinearFn& fn) {
  return linear_operator_impl<false>(domain, codomain, fn);
}
}  // namespace serial

}  // namespace pcx
