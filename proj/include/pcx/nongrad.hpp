#pragma once

// Periodic complexes that are not compressions of bounded ones.
//
// cycle_complex inserts maximal nonzero compositions along an oriented cycle
// until consecutive maps compose to zero. splice_ext glues minimal
// resolutions of simples along chosen Ext classes by iterated cones.
// nongradability_certificate records the hypotheses under which an
// indecomposable, minimal, genuinely periodic pattern yields an object of
// K_n outside the image of compression. naturality_square and
// sigma_cone_compare probe whether a map f and its suspension give
// isomorphic cones.

#include "pcx/bounded.hpp"
#include "pcx/periodic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcx {

enum class CheckStatus { Pass, Fail, Unknown };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Unknown;
  std::string witness;  // human-readable; the structured witness lives in the owning result
};

struct Certificate {
  std::string verdict;
  std::string justification;
  std::vector<Check> checks;
};

/// One period of the complex obtained from the cycle (arrow indices in
/// traversal order). Throws CYCLE_INVALID.
PeriodicComplex cycle_complex(const AlgebraPtr& A, const std::vector<int>& cycle);

/// A class in Ext^degree(S_previous, S_target): `coeff` on ext_basis (empty
/// means the first basis vector).
struct ExtStep {
  int target = 0;
  int degree = 0;
  std::vector<Scalar> coeff;
};

struct Splice {
  BoundedComplex raw;       // the iterated cone
  BoundedComplex complex;   // minimal, top degree 0, scalars normalized
  std::vector<BoundedComplex> resolutions;
  std::vector<ChainMap> classes;
  std::size_t end_dim = 0;  // dim End in K^b of the result
};

/// Starts from the resolution of S_first; each step cones on the next
/// resolution. Throws ZERO_EXT when a chosen class vanishes and NO_HOMOTOPY
/// when consecutive classes do not compose to zero up to homotopy.
Splice splice_ext(const AlgebraPtr& A, int first, const std::vector<ExtStep>& chain,
                  std::optional<std::size_t> bound = std::nullopt);

/// Integer degrees lifting the degrees of X so that every differential entry
/// raises degree by exactly one: X is then literally a compression.
std::optional<BoundedComplex> gradable_shape(const PeriodicComplex& X);

/// Y repeated lcm(p, n) / p times around and folded to period n.
PeriodicComplex wrap(const PeriodicComplex& Y, int n);

struct NongradResult {
  Certificate certificate;
  PeriodicComplex pattern, wrapped;
  std::size_t end_dim_pattern = 0;  // dim End_{K_p}(Y)
  IndecResult indec;                // on the wrap
  std::optional<BoundedComplex> shape;
};

NongradResult nongradability_certificate(const PeriodicComplex& Y, int n, const SearchCaps& caps = {});

/// Pairs (u: Q1 -> Sigma Q1, v: Q2 -> Sigma Q2) of chain maps with
/// v f - (Sigma f) u null-homotopic, searched for u and v both invertible.
struct Naturality {
  Verdict verdict = Verdict::Unknown;  // Yes = SOLVABLE
  std::optional<ProjMap> u, v, s;
  std::size_t solution_dim = 0;
  TopSearch search;
  bool degenerate = false;  // characteristic 2, where Sigma acts trivially
};
Naturality naturality_square(const PeriodicComplex& Q1, const PeriodicComplex& Q2, const ProjMap& f,
                             const SearchCaps& caps = {});

struct SigmaCones {
  PeriodicComplex cone_f, cone_sigma_f;
  IsoK strict;    // in C_1
  IsoK homotopy;  // in K_1
  bool degenerate = false;
};
SigmaCones sigma_cone_compare(const PeriodicComplex& Q1, const PeriodicComplex& Q2, const ProjMap& f,
                              const SearchCaps& caps = {});

}  // namespace pcx
