#pragma once

// Bounded complexes of projectives (graded objects of period 0), chain maps
// into shifts, cones, minimal models and Hom in the homotopy category.
// A chain map of shift l from X to Y is a degree-0 chain map X -> Sigma^l Y,
// so its component at X^k lands in Y^{k+l}.

#include "pcx/graded.hpp"
#include "pcx/representation.hpp"

#include <optional>
#include <vector>

namespace pcx {

using BoundedComplex = Graded;

/// terms[k] sits in degree lo + k; diffs[k]: terms[k] -> terms[k + 1].
BoundedComplex make_bounded(AlgebraPtr A, int lo, const std::vector<ProjModule>& terms,
                            const std::vector<ProjMap>& diffs);
/// ... -> P_1 -> P_0 placed in degrees -l, ..., 0.
BoundedComplex from_resolution(const AlgebraPtr& A, const Resolution& r);
BoundedComplex stalk(AlgebraPtr A, const ProjModule& P, int degree = 0);

/// Summands in degree k, and the differential leaving degree k.
ProjModule term(const Graded& X, int k);
ProjMap differential(const Graded& X, int k);
/// Lowest and highest occupied degree; nullopt for the zero complex.
std::optional<std::pair<int, int>> degree_range(const Graded& X);
std::size_t width(const Graded& X);

struct ChainMap {
  BoundedComplex source, target;
  int shift = 0;
  ProjMap map;  // source.module -> target.module

  /// Sigma^shift of the target.
  BoundedComplex shifted_target() const { return pcx::shift(target, shift); }
  bool is_valid() const { return is_chain_map(source, shifted_target(), map); }
};

BoundedComplex cone_bounded(const ChainMap& f);
/// Minimal model with its equivalence, summands listed by ascending degree.
Minimization minimize_bounded(const BoundedComplex& X);

/// Hom_{K^b}(X, Sigma^l Y).
struct HomK {
  std::size_t dim = 0;
  std::vector<ProjMap> basis;  // chain maps X -> Sigma^l Y
  ChainSpace space;
};
HomK hom_kb(const BoundedComplex& X, const BoundedComplex& Y, int l);

/// Ext^l(S, T) as chain maps between minimal resolutions modulo homotopy.
struct ExtBasis {
  BoundedComplex source, target;  // resolutions of S and T
  int degree = 0;
  std::vector<ChainMap> basis;
};
ExtBasis ext_basis(const Representation& S, const Representation& T, int l,
                   std::optional<std::size_t> bound = std::nullopt);

}  // namespace pcx
