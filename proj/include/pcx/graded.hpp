#pragma once

// Graded differential modules of projectives: a sum of indecomposable
// projectives, each summand carrying a degree, and one total differential
// raising degree by one. Period 0 means Z-graded (bounded complexes);
// period n >= 1 means degrees are taken mod n (n-periodic complexes, and
// differential modules at n = 1).
//
// Conventions: (Sigma X)^i = X^{i+1} with negated differential; the cone of
// f: X -> Y is Sigma X + Y with differential [[-d_X, 0], [f, d_Y]]; a
// null-homotopy of f is a degree -1 map s with f = s d_X + d_Y s.

#include "pcx/projective.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pcx {

struct Graded {
  AlgebraPtr A;
  int period = 0;
  ProjModule module;
  std::vector<int> degree;  // per summand; in [0, period) when period > 0
  ProjMap d;

  std::size_t size() const noexcept { return module.size(); }
  bool empty() const noexcept { return module.empty(); }
  /// Summand indices of the given degree, in order.
  std::vector<std::size_t> at_degree(int k) const;
  /// Distinct degrees present, ascending.
  std::vector<int> degrees() const;
};

int normalize_degree(int period, int k);

/// Builds and validates (degree pattern and d^2 = 0). Throws NOT_A_COMPLEX.
Graded make_graded(AlgebraPtr A, int period, ProjModule module, std::vector<int> degree, ProjMap d);
Graded zero_graded(AlgebraPtr A, int period);
void validate(const Graded& X);

/// Sigma^times X (times may be negative).
Graded shift(const Graded& X, int times = 1);
/// Cone of a degree-0 chain map f: X -> Y.
Graded cone(const Graded& X, const Graded& Y, const ProjMap& f);
Graded direct_sum(const Graded& X, const Graded& Y);
/// Sorts summands by (degree, original position) and returns the permutation used.
Graded sorted_by_degree(const Graded& X, std::vector<std::size_t>* order = nullptr);

/// Rescales each summand by a unit so that its first incoming entry from an
/// earlier summand has leading coefficient 1. `iso` receives the diagonal chain
/// isomorphism from X to the result.
Graded normalize_scalars(const Graded& X, ProjMap* iso = nullptr);

/// Maps X -> Y raising degree by `deg`.
HomCoords map_coords(const Graded& X, const Graded& Y, int deg);
bool has_degree(const Graded& X, const Graded& Y, const ProjMap& f, int deg);
bool is_chain_map(const Graded& X, const Graded& Y, const ProjMap& f);
bool is_minimal(const Graded& X);
/// f - (s d_X + d_Y s)
ProjMap homotopy_defect(const Graded& X, const Graded& Y, const ProjMap& f, const ProjMap& s);

/// Strict chain maps X -> Y (degree 0) and the null-homotopic ones among them.
struct ChainSpace {
  HomCoords coords;         // degree-0 maps
  Matrix cycles;            // basis of chain maps, as coordinate columns
  Matrix boundaries;        // independent columns spanning the null-homotopic maps
  std::vector<std::size_t> quotient;  // columns of `cycles` completing `boundaries`
  std::size_t dim_k() const noexcept { return quotient.size(); }
  ProjMap cycle(std::size_t k) const { return coords.from_vector(cycles, 0, k); }
  ProjMap quotient_basis(std::size_t k) const { return coords.from_vector(cycles, 0, quotient[k]); }
};
ChainSpace chain_space(const Graded& X, const Graded& Y);

std::optional<ProjMap> null_homotopy(const Graded& X, const Graded& Y, const ProjMap& f);

/// Gaussian elimination of a unit entry, repeated until the differential is radical.
/// f: X -> min, g: min -> X, f g = 1 and g f - 1 = s d + d s.
struct Minimization {
  Graded min;
  ProjMap f, g, s;
  std::size_t steps = 0;
};
Minimization minimize(const Graded& X);

struct SearchCaps {
  std::uint64_t seed = 0;
  std::uint64_t enumerate = 10'000'000;
  std::uint64_t random = 10'000;
};

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

/// Searches span(columns of `tops`) for a vector whose entries, read as square
/// blocks of the given sizes, are all invertible matrices: seeded random samples
/// first, then over F_p an exhaustive pass over the column span when it has at
/// most caps.enumerate elements.
struct TopSearch {
  Verdict verdict = Verdict::Unknown;
  std::vector<Scalar> coeff;    // on the columns of `tops`, when found
  std::string reason;           // "found", "exhausted", "caps"
  std::size_t top_rank = 0;
  std::uint64_t field_size = 0; // 0 for Q
  std::uint64_t searched = 0;
  std::uint64_t enumerated = 0; // size of the enumerated span, 0 if not enumerated
  bool exhaustive = false;
};
TopSearch search_invertible_top(const Field& F, const Matrix& tops, const std::vector<std::size_t>& blocks,
                                const SearchCaps& caps);

/// Search for an invertible strict chain map X -> Y.
struct IsoSearch {
  Verdict verdict = Verdict::Unknown;
  std::optional<ProjMap> witness;
  std::string reason;           // "identical", "dimension", "exhausted", "found", "caps"
  std::size_t hom_dim = 0;      // dim of strict chain maps
  std::size_t top_rank = 0;     // dim of their image on tops
  std::uint64_t field_size = 0; // 0 for Q
  std::uint64_t searched = 0;
  std::uint64_t enumerated = 0;
  bool exhaustive = false;
};
IsoSearch find_isomorphism(const Graded& X, const Graded& Y, const SearchCaps& caps = {});

/// Isomorphism in the homotopy category: minimize both sides, then search strictly.
struct IsoK {
  IsoSearch search;
  Minimization mx, my;
};
IsoK iso_k(const Graded& X, const Graded& Y, const SearchCaps& caps = {});

/// Endomorphism algebra in the homotopy category with structure constants.
class EndAlgebra {
 public:
  explicit EndAlgebra(const Graded& X);
  std::size_t dim() const noexcept { return space_.dim_k(); }
  const Field& field() const noexcept { return field_; }
  Matrix one() const { return one_; }
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  Matrix left_regular(const Matrix& a) const;
  /// Coordinates of a chain map modulo null-homotopic maps.
  Matrix reduce(const ProjMap& f) const;
  ProjMap representative(const Matrix& a) const;
  const ChainSpace& space() const noexcept { return space_; }

 private:
  ChainSpace space_;
  Field field_;
  Matrix solver_;  // [boundaries | quotient basis]
  std::vector<std::vector<Matrix>> table_;
  Matrix one_;
};

enum class IndecVerdict { Indecomposable, Decomposable, Zero, Unknown };
std::string to_string(IndecVerdict v);

struct IndecResult {
  IndecVerdict verdict = IndecVerdict::Unknown;
  std::size_t end_dim = 0;
  std::string method;                // "dim End = 1", "trace form", "idempotent", ...
  std::optional<ProjMap> idempotent; // chain map, idempotent up to homotopy
  std::size_t radical_dim = 0;
  std::size_t trials = 0;
};
IndecResult indecomposable(const Graded& X, const SearchCaps& caps = {}, std::size_t trials = 64);

std::string describe(const Graded& X);

}  // namespace pcx
