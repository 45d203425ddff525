#pragma once

// n-periodic complexes. The projective flavor is a Graded object of period n;
// the representation flavor keeps one Representation per position and is used
// for homology and quasi-isomorphisms. At n = 1 both are differential modules.

#include "pcx/bounded.hpp"
#include "pcx/graded.hpp"
#include "pcx/representation.hpp"

#include <vector>

namespace pcx {

using PeriodicComplex = Graded;

/// diffs[i]: terms[i] -> terms[(i + 1) mod n]. Throws NOT_A_COMPLEX.
PeriodicComplex make_periodic(AlgebraPtr A, int n, const std::vector<ProjModule>& terms,
                              const std::vector<ProjMap>& diffs);
PeriodicComplex shift_periodic(const PeriodicComplex& X);
PeriodicComplex cone_periodic(const PeriodicComplex& X, const PeriodicComplex& Y, const ProjMap& f);

struct RepComplex {
  AlgebraPtr A;
  int n = 1;
  std::vector<Representation> terms;
  std::vector<RepMap> diffs;  // diffs[i]: terms[i] -> terms[(i + 1) mod n]
};

/// Validates shapes, Lambda-linearity and vanishing composites. Throws NOT_A_COMPLEX.
RepComplex make_rep_complex(AlgebraPtr A, int n, std::vector<Representation> terms, std::vector<RepMap> diffs);
RepComplex evaluate(const PeriodicComplex& X);
/// Componentwise evaluation of a degree-0 map X -> Y.
std::vector<RepMap> evaluate_map(const PeriodicComplex& X, const PeriodicComplex& Y, const ProjMap& f);
bool is_chain_map(const RepComplex& X, const RepComplex& Y, const std::vector<RepMap>& f);

struct Homology {
  Representation rep;
  Subobject cycles;    // ker d^i inside X^i
  Quotient quotient;   // cycles / im d^{i-1}
};
std::vector<Homology> homology_periodic(const RepComplex& X);
std::vector<RepMap> induced_on_homology(const RepComplex& X, const RepComplex& Y, const std::vector<RepMap>& f);
bool quasi_iso(const RepComplex& X, const RepComplex& Y, const std::vector<RepMap>& f);

/// Hom in the n-periodic homotopy category.
HomK hom_kn(const PeriodicComplex& X, const PeriodicComplex& Y);

enum class Ambient { Strict, Homotopy };  // C_n or K_n
IsoK iso_cn(const PeriodicComplex& X, const PeriodicComplex& Y, const SearchCaps& caps = {},
            Ambient ambient = Ambient::Homotopy);

}  // namespace pcx
