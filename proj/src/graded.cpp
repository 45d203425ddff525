#include "pcx/graded.hpp"

#include "pcx/error.hpp"
#include "pcx/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace pcx {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

Scalar random_scalar(const Field& F, std::mt19937_64& rng) {
  if (F.is_rational()) return F.from_int(static_cast<std::int64_t>(rng() % 21) - 10);
  return F.from_int(static_cast<std::int64_t>(rng() % F.characteristic()));
}

Element unit_inverse(const PathAlgebra& A, const Element& phi, int v) {
  const auto lambda = phi.coefficient(A.idempotent(v));
  require(lambda.has_value(), "pivot is not a unit");
  const Scalar inv = lambda->inverse();
  const Element e = unit_at(A, v);
  const Element u = (phi - e.scaled(*lambda)).scaled(-inv);
  Element sum = e, term = e;
  while (true) {
    term = multiply(A, term, u);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum.scaled(inv);
}

std::vector<std::size_t> all_except(std::size_t n, std::size_t a, std::size_t c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != a && i != c) out.push_back(i);
  return out;
}

// First entry (row, col) with a nonzero trivial-path coefficient, scanning the
// differential degree by degree, row-major, skipping the diagonal.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const Graded& X) {
  const PathAlgebra& A = *X.A;
  for (int k : X.degrees()) {
    const auto cols = X.at_degree(k);
    const auto rows = X.at_degree(normalize_degree(X.period, k + 1));
    for (auto r : rows)
      for (auto c : cols) {
        if (r == c || X.module[r] != X.module[c]) continue;
        if (X.d(r, c).coefficient(A.idempotent(X.module[c]))) return std::make_pair(r, c);
      }
  }
  return std::nullopt;
}

Matrix chain_operator(const Graded& X, const Graded& Y, const HomCoords& c0, const HomCoords& c1) {
  return linear_operator(CoordSpace({c0}), CoordSpace({c1}), [&](const std::vector<ProjMap>& f) {
    return std::vector<ProjMap>{Y.d * f[0] - f[0] * X.d};
  });
}

Matrix homotopy_operator(const Graded& X, const Graded& Y, const HomCoords& cm, const HomCoords& c0) {
  return linear_operator(CoordSpace({cm}), CoordSpace({c0}), [&](const std::vector<ProjMap>& s) {
    return std::vector<ProjMap>{s[0] * X.d + Y.d * s[0]};
  });
}

std::multiset<std::pair<int, int>> shape(const Graded& X) {
  std::multiset<std::pair<int, int>> s;
  for (std::size_t i = 0; i < X.size(); ++i) s.insert({X.module[i], X.degree[i]});
  return s;
}

}  // namespace

int normalize_degree(int period, int k) {
  if (period <= 0) return k;
  return ((k % period) + period) % period;
}

std::vector<std::size_t> Graded::at_degree(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degree.size(); ++i)
    if (degree[i] == k) out.push_back(i);
  return out;
}

std::vector<int> Graded::degrees() const {
  std::vector<int> out(degree.begin(), degree.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate(const Graded& X) {
  require(X.degree.size() == X.module.size(), "graded module: one degree per summand");
  require(X.d.source() == X.module && X.d.target() == X.module, "graded module: differential has the wrong shape");
  for (std::size_t i = 0; i < X.size(); ++i)
    require(X.degree[i] == normalize_degree(X.period, X.degree[i]), "graded module: degree out of range");
  for (std::size_t j = 0; j < X.size(); ++j)
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!X.d(j, i).is_zero() && X.degree[j] != normalize_degree(X.period, X.degree[i] + 1))
        throw Error(ErrorCode::NotAComplex, "differential entry (" + std::to_string(j) + ", " + std::to_string(i) +
                                                ") does not raise the degree by one");
  const ProjMap dd = X.d * X.d;
  for (std::size_t j = 0; j < X.size(); ++j)
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!dd(j, i).is_zero())
        throw Error(ErrorCode::NotAComplex, "d*d has entry (" + std::to_string(j) + ", " + std::to_string(i) +
                                                ") = " + dd(j, i).to_string(*X.A));
}

Graded make_graded(AlgebraPtr A, int period, ProjModule module, std::vector<int> degree, ProjMap d) {
  Graded X{std::move(A), period, std::move(module), std::move(degree), std::move(d)};
  for (auto& k : X.degree) k = normalize_degree(period, k);
  validate(X);
  return X;
}

Graded zero_graded(AlgebraPtr A, int period) {
  ProjMap d(A, {}, {});
  return Graded{std::move(A), period, {}, {}, std::move(d)};
}

Graded shift(const Graded& X, int times) {
  Graded Y = X;
  for (auto& k : Y.degree) k = normalize_degree(X.period, k - times);
  if (times % 2 != 0) Y.d = -X.d;
  return Y;
}

Graded cone(const Graded& X, const Graded& Y, const ProjMap& f) {
  require(X.period == Y.period, "cone: periods differ");
  require(f.source() == X.module && f.target() == Y.module, "cone: map has the wrong shape");
  require(has_degree(X, Y, f, 0), "cone: map does not preserve degrees");
  Graded C;
  C.A = X.A;
  C.period = X.period;
  C.module = ProjModule::direct_sum(X.module, Y.module);
  for (auto k : X.degree) C.degree.push_back(normalize_degree(X.period, k - 1));
  for (auto k : Y.degree) C.degree.push_back(k);
  C.d = ProjMap(X.A, C.module, C.module);
  C.d.set_block(0, 0, -X.d);
  C.d.set_block(X.size(), 0, f);
  C.d.set_block(X.size(), X.size(), Y.d);
  validate(C);
  return C;
}

Graded direct_sum(const Graded& X, const Graded& Y) {
  require(X.period == Y.period, "direct sum: periods differ");
  Graded S;
  S.A = X.A ? X.A : Y.A;
  S.period = X.period;
  S.module = ProjModule::direct_sum(X.module, Y.module);
  S.degree = X.degree;
  S.degree.insert(S.degree.end(), Y.degree.begin(), Y.degree.end());
  S.d = direct_sum(X.d, Y.d);
  return S;
}

Graded sorted_by_degree(const Graded& X, std::vector<std::size_t>* order) {
  std::vector<std::size_t> idx(X.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return X.degree[a] < X.degree[b]; });
  Graded Y = X;
  Y.d = X.d.restrict(idx, idx);
  Y.module = Y.d.source();
  for (std::size_t i = 0; i < idx.size(); ++i) Y.degree[i] = X.degree[idx[i]];
  if (order) *order = idx;
  return Y;
}

Graded normalize_scalars(const Graded& X, ProjMap* iso) {
  const Field F = X.A->field();
  std::vector<Scalar> lambda(X.size(), F.one());
  for (std::size_t j = 0; j < X.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!X.d(j, i).is_zero()) {
        lambda[j] = lambda[i] / X.d(j, i).terms().front().second;
        break;
      }
  ProjMap D(X.A, X.module, X.module), Dinv(X.A, X.module, X.module);
  for (std::size_t i = 0; i < X.size(); ++i) {
    D.set(i, i, unit_at(*X.A, X.module[i]).scaled(lambda[i]));
    Dinv.set(i, i, unit_at(*X.A, X.module[i]).scaled(lambda[i].inverse()));
  }
  Graded Y = X;
  Y.d = D * X.d * Dinv;
  if (iso) *iso = D;
  return Y;
}

HomCoords map_coords(const Graded& X, const Graded& Y, int deg) {
  return HomCoords(X.A, X.module, Y.module, [&X, &Y, deg](std::size_t j, std::size_t i) {
    return Y.degree[j] == normalize_degree(X.period, X.degree[i] + deg);
  });
}

bool has_degree(const Graded& X, const Graded& Y, const ProjMap& f, int deg) {
  for (std::size_t j = 0; j < f.rows(); ++j)
    for (std::size_t i = 0; i < f.cols(); ++i)
      if (!f(j, i).is_zero() && Y.degree[j] != normalize_degree(X.period, X.degree[i] + deg)) return false;
  return true;
}

bool is_chain_map(const Graded& X, const Graded& Y, const ProjMap& f) {
  return f.source() == X.module && f.target() == Y.module && has_degree(X, Y, f, 0) && Y.d * f == f * X.d;
}

bool is_minimal(const Graded& X) { return X.d.is_radical(); }

ProjMap homotopy_defect(const Graded& X, const Graded& Y, const ProjMap& f, const ProjMap& s) {
  return f - (s * X.d + Y.d * s);
}

ChainSpace chain_space(const Graded& X, const Graded& Y) {
  require(X.period == Y.period, "chain maps: periods differ");
  HomCoords c0 = map_coords(X, Y, 0), c1 = map_coords(X, Y, 1), cm = map_coords(X, Y, -1);
  const Matrix z = nullspace(chain_operator(X, Y, c0, c1));
  const Matrix h = homotopy_operator(X, Y, cm, c0);
  const Matrix b = h.select_columns(independent_columns(h));
  auto q = extend_basis(b, z);
  return ChainSpace{std::move(c0), z, b, std::move(q)};
}

std::optional<ProjMap> null_homotopy(const Graded& X, const Graded& Y, const ProjMap& f) {
  HomCoords c0 = map_coords(X, Y, 0), cm = map_coords(X, Y, -1);
  const Matrix h = homotopy_operator(X, Y, cm, c0);
  auto sol = solve(h, c0.to_vector(f));
  if (!sol) return std::nullopt;
  return cm.from_vector(sol->particular);
}

Minimization minimize(const Graded& X) {
  const AlgebraPtr& A = X.A;
  Minimization m;
  m.min = X;
  m.f = ProjMap::identity(A, X.module);
  m.g = m.f;
  m.s = ProjMap(A, X.module, X.module);
  while (auto pivot = find_pivot(m.min)) {
    const Graded& cur = m.min;
    const auto [c, a] = *pivot;  // entry d(c, a): summand a -> summand c
    const int v = cur.module[a];
    const auto B = all_except(cur.size(), a, c);
    ProjModule PB;
    std::vector<int> degB;
    for (auto b : B) {
      PB.summands.push_back(cur.module[b]);
      degB.push_back(cur.degree[b]);
    }
    const ProjModule Pv{{v}};
    const ProjMap phi_inv = ProjMap::single(A, Pv, Pv, 0, 0, unit_inverse(*A, cur.d(c, a), v));
    const ProjMap eBA = cur.d.restrict(B, {a});
    const ProjMap eCB = cur.d.restrict({c}, B);
    const ProjMap q = phi_inv * eCB;           // B -> A
    const ProjMap r = -(eBA * phi_inv);        // C -> B
    ProjMap dB = cur.d.restrict(B, B) - eBA * q;

    ProjMap f1(A, cur.module, PB), g1(A, PB, cur.module), s1(A, cur.module, cur.module);
    for (std::size_t t = 0; t < B.size(); ++t) {
      f1.set(t, B[t], unit_at(*A, PB[t]));
      f1.set(t, c, r(t, 0));
      g1.set(B[t], t, unit_at(*A, PB[t]));
      g1.set(a, t, -q(0, t));
    }
    s1.set(a, c, -phi_inv(0, 0));

    m.s = m.s + m.g * s1 * m.f;
    m.f = f1 * m.f;
    m.g = m.g * g1;
    m.min = Graded{A, X.period, PB, degB, std::move(dB)};
    ++m.steps;
  }
  return m;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(IndecVerdict v) {
  switch (v) {
    case IndecVerdict::Indecomposable: return "INDECOMPOSABLE";
    case IndecVerdict::Decomposable: return "DECOMPOSABLE";
    case IndecVerdict::Zero: return "ZERO";
    case IndecVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

TopSearch search_invertible_top(const Field& F, const Matrix& tops, const std::vector<std::size_t>& blocks,
                                const SearchCaps& caps) {
  TopSearch out;
  out.field_size = F.size().value_or(0);
  const auto basis = independent_columns(tops);
  out.top_rank = basis.size();

  auto invertible = [&](const std::vector<Scalar>& coeff) {
    std::size_t e = 0;
    for (const auto n : blocks) {
      Matrix m(F, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c, ++e)
          for (std::size_t k = 0; k < basis.size(); ++k)
            if (!coeff[k].is_zero()) m(r, c) += coeff[k] * tops(e, basis[k]);
      if (determinant(m).is_zero()) return false;
    }
    return true;
  };
  auto accept = [&](const std::vector<Scalar>& coeff) {
    out.verdict = Verdict::Yes;
    out.reason = "found";
    out.coeff.assign(tops.cols(), F.zero());
    for (std::size_t k = 0; k < basis.size(); ++k) out.coeff[basis[k]] = coeff[k];
  };

  std::mt19937_64 rng(caps.seed);
  std::vector<Scalar> coeff(basis.size(), F.zero());
  for (std::uint64_t t = 0; t < caps.random; ++t) {
    for (auto& c : coeff) c = random_scalar(F, rng);
    ++out.searched;
    if (invertible(coeff)) {
      accept(coeff);
      return out;
    }
  }
  if (F.is_rational()) {
    out.reason = "caps";
    return out;
  }
  const std::uint64_t q = *F.size();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (total > caps.enumerate / q) {
      total = caps.enumerate + 1;
      break;
    }
    total *= q;
  }
  if (total > caps.enumerate) {
    out.reason = "caps";
    return out;
  }
  out.enumerated = total;
  // Exhaustive pass in chunks; the smallest index with an invertible top wins.
  const std::uint64_t chunk = 1 << 16;
  for (std::uint64_t start = 0; start < total; start += chunk) {
    const std::uint64_t end = std::min(total, start + chunk);
    std::uint64_t best = total;
    const long long lo = static_cast<long long>(start), hi = static_cast<long long>(end);
#pragma omp parallel for schedule(static) reduction(min : best)
    for (long long idx = lo; idx < hi; ++idx) {
      std::vector<Scalar> c(basis.size());
      std::uint64_t rest = static_cast<std::uint64_t>(idx);
      for (auto& s : c) {
        s = F.element(rest % q);
        rest /= q;
      }
      if (invertible(c) && static_cast<std::uint64_t>(idx) < best) best = static_cast<std::uint64_t>(idx);
    }
    out.searched += end - start;
    if (best < total) {
      std::uint64_t rest = best;
      for (auto& s : coeff) {
        s = F.element(rest % q);
        rest /= q;
      }
      accept(coeff);
      return out;
    }
  }
  out.verdict = Verdict::No;
  out.reason = "exhausted";
  out.exhaustive = true;
  return out;
}

IsoSearch find_isomorphism(const Graded& X, const Graded& Y, const SearchCaps& caps) {
  IsoSearch out;
  const Field F = X.A->field();
  out.field_size = F.size().value_or(0);
  if (X.period != Y.period || shape(X) != shape(Y)) {
    out.verdict = Verdict::No;
    out.reason = "dimension";
    return out;
  }
  if (X.module == Y.module && X.degree == Y.degree && X.d == Y.d) {
    out.verdict = Verdict::Yes;
    out.reason = "identical";
    out.witness = ProjMap::identity(X.A, X.module);
    return out;
  }

  const HomCoords c0 = map_coords(X, Y, 0), c1 = map_coords(X, Y, 1);
  const Matrix z = nullspace(chain_operator(X, Y, c0, c1));
  out.hom_dim = z.cols();

  // Tops are block diagonal over (vertex, degree) classes; invertibility is blockwise.
  std::map<std::pair<int, int>, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> classes;
  for (std::size_t i = 0; i < X.size(); ++i) classes[{X.module[i], X.degree[i]}].second.push_back(i);
  for (std::size_t j = 0; j < Y.size(); ++j) classes[{Y.module[j], Y.degree[j]}].first.push_back(j);
  std::vector<std::size_t> blocks;
  std::size_t entries = 0;
  for (auto& [key, rc] : classes) {
    entries += rc.first.size() * rc.second.size();
    blocks.push_back(rc.first.size());
  }
  Matrix tops(F, entries, z.cols());
  for (std::size_t k = 0; k < z.cols(); ++k) {
    const Matrix t = c0.from_vector(z, 0, k).top_matrix();
    std::size_t e = 0;
    for (const auto& [key, rc] : classes)
      for (auto r : rc.first)
        for (auto c : rc.second) tops(e++, k) = t(r, c);
  }
  const TopSearch t = search_invertible_top(F, tops, blocks, caps);
  out.verdict = t.verdict;
  out.reason = t.reason;
  out.top_rank = t.top_rank;
  out.searched = t.searched;
  out.exhaustive = t.exhaustive;
  out.enumerated = t.enumerated;
  if (t.verdict == Verdict::Yes) {
    Matrix v(F, c0.dim(), 1);
    for (std::size_t k = 0; k < z.cols(); ++k)
      if (!t.coeff[k].is_zero()) v += z.column(k).scaled(t.coeff[k]);
    out.witness = c0.from_vector(v);
  }
  return out;
}

IsoK iso_k(const Graded& X, const Graded& Y, const SearchCaps& caps) {
  IsoK r;
  r.mx = minimize(X);
  r.my = minimize(Y);
  r.search = find_isomorphism(r.mx.min, r.my.min, caps);
  return r;
}

EndAlgebra::EndAlgebra(const Graded& X) : space_(chain_space(X, X)), field_(X.A->field()) {
  solver_ = Matrix::hstack(space_.boundaries, space_.cycles.select_columns(space_.quotient));
  const std::size_t n = dim();
  std::vector<ProjMap> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(space_.quotient_basis(i));
  table_.assign(n, std::vector<Matrix>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table_[i][j] = reduce(basis[i] * basis[j]);
  one_ = reduce(ProjMap::identity(X.A, X.module));
}

Matrix EndAlgebra::reduce(const ProjMap& f) const {
  auto sol = solve(solver_, space_.coords.to_vector(f));
  require(sol.has_value(), "endomorphism is not a chain map");
  return sol->particular.block(space_.boundaries.cols(), 0, dim(), 1);
}

Matrix EndAlgebra::multiply(const Matrix& a, const Matrix& b) const {
  Matrix out(field_, dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a(i, 0).is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!b(j, 0).is_zero()) out += table_[i][j].scaled(a(i, 0) * b(j, 0));
  }
  return out;
}

Matrix EndAlgebra::left_regular(const Matrix& a) const {
  Matrix l(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Matrix e(field_, dim(), 1);
    e(j, 0) = field_.one();
    l.set_block(0, j, multiply(a, e));
  }
  return l;
}

ProjMap EndAlgebra::representative(const Matrix& a) const {
  Matrix v(field_, space_.coords.dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) v += space_.cycles.column(space_.quotient[i]).scaled(a(i, 0));
  return space_.coords.from_vector(v);
}

IndecResult indecomposable(const Graded& X, const SearchCaps& caps, std::size_t trials) {
  IndecResult out;
  const EndAlgebra E(X);
  const Field F = E.field();
  const std::size_t n = E.dim();
  out.end_dim = n;
  if (n == 0) {
    out.verdict = IndecVerdict::Zero;
    out.method = "dim End = 0";
    return out;
  }
  if (n == 1) {
    out.verdict = IndecVerdict::Indecomposable;
    out.method = "dim End = 1";
    return out;
  }
  std::mt19937_64 rng(caps.seed);
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.trials;
    Matrix a(F, n, 1);
    for (std::size_t i = 0; i < n; ++i) a(i, 0) = random_scalar(F, rng);
    // Minimal polynomial from the first dependency among 1, a, a^2, ...
    Matrix powers = E.one();
    Matrix p = E.one();
    poly::Poly m;
    for (std::size_t k = 1; k <= n; ++k) {
      p = E.multiply(a, p);
      if (auto s = solve(powers, p)) {
        for (std::size_t i = 0; i < k; ++i) m.push_back(-s->particular(i, 0));
        m.push_back(F.one());
        break;
      }
      powers = Matrix::hstack(powers, p);
    }
    auto split = poly::coprime_split(m, rng);
    if (!split) continue;
    const auto bez = poly::ext_gcd(split->first, split->second);
    const poly::Poly ep = poly::mul(bez.s, split->first);
    Matrix e(F, n, 1);
    for (auto it = ep.rbegin(); it != ep.rend(); ++it) e = E.multiply(a, e) + E.one().scaled(*it);
    if (e.is_zero() || e == E.one() || E.multiply(e, e) != e) continue;
    out.verdict = IndecVerdict::Decomposable;
    out.method = "idempotent";
    out.idempotent = E.representative(e);
    return out;
  }
  const std::uint32_t ch = F.characteristic();
  if (ch == 0 || ch > n) {
    Matrix gram(F, n, n);
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix e(F, n, 1);
      e(i, 0) = F.one();
      basis.push_back(e);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Matrix l = E.left_regular(E.multiply(basis[i], basis[j]));
        Scalar tr = F.zero();
        for (std::size_t k = 0; k < n; ++k) tr += l(k, k);
        gram(i, j) = tr;
      }
    out.radical_dim = nullspace(gram).cols();
    if (n - out.radical_dim == 1) {
      out.verdict = IndecVerdict::Indecomposable;
      out.method = "trace form";
      return out;
    }
  }
  out.verdict = IndecVerdict::Unknown;
  out.method = "no idempotent found";
  return out;
}

std::string describe(const Graded& X) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < X.size(); ++i)
    os << (i ? ", " : "") << "P" << X.A->quiver().vertex_name(X.module[i]) << "@" << X.degree[i];
  os << "] d = " << X.d.to_string();
  return os.str();
}

}  // namespace pcx
