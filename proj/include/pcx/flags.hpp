#pragma once

// Projective flags for differential modules (period 1).
//
// flag_resolution builds the double horseshoe: resolutions X of Im(e) and Y of
// H = Ker(e)/Im(e), a horseshoe for 0 -> Im -> Ker -> H -> 0 and another for
// 0 -> Ker -> M -> Im -> 0. Each term is P_i = X_i + Y_i + X_i (quotient copy,
// Y, sub copy) and carries e_i = (-1)^i times the map sending the quotient copy
// identically onto the sub copy. The flag is P_l + ... + P_0 with e_i on the
// diagonal and the resolution differentials below it.
//
// relproj_to_flag follows the conjugation that turns a differential module with
// projective underlying module into one admitting a flag.

#include "pcx/bounded.hpp"
#include "pcx/periodic.hpp"

#include <optional>
#include <vector>

namespace pcx {

/// Differential entries only go from a block to a strictly later block.
bool strictly_lower(const Graded& X, const std::vector<std::size_t>& block);

struct FlagWitness {
  PeriodicComplex flag;
  std::vector<std::size_t> block;  // per summand, the refined flag piece (0 = first)
  std::vector<ProjModule> pieces;  // refined pieces in order
  std::size_t length = 0;          // l, with P_l first
  RepMap augmentation;             // eval(flag) -> M
  bool lower = false;
  bool quasi_iso = false;
};

/// Throws GLDIM_BOUND_EXCEEDED from the resolutions.
FlagWitness flag_resolution(const RepComplex& M, std::optional<std::size_t> bound = std::nullopt);

struct RelProjFlag {
  PeriodicComplex P;          // the input
  BoundedComplex resolution;  // P_l -> ... -> P_0 resolving Im(e), P_0 the underlying module
  PeriodicComplex deltaP;     // its compression
  ProjMap s;                  // null-homotopy of the lifted endomorphism, as a map deltaP -> deltaP
  ProjMap h, e, m;            // h_i = (-1)^i s_i, projection and inclusion of P_0
  PeriodicComplex Q, Qprime;
  ProjMap f, f_inverse;       // Qprime -> Q
  std::vector<std::size_t> block;  // flag blocks of Qprime
  bool homotopy_identity = false;  // m e_P e = e_dP h - h e_dP
  bool intertwines = false;        // e_Q f = f e_Q'
  bool lower = false;
};

/// Throws NO_HOMOTOPY if the lifted zero endomorphism is not null-homotopic.
RelProjFlag relproj_to_flag(const PeriodicComplex& P, std::optional<std::size_t> bound = std::nullopt);

struct StalkCheck {
  bool holds = false;
  FlagWitness flag_m, flag_h;
  IsoK iso;
};

/// Compares the minimal models of flag resolutions of (M, e) and (H(M), 0).
/// Throws NOT_HEREDITARY when the algebra has relations.
StalkCheck hereditary_stalk_check(const RepComplex& M, const SearchCaps& caps = {},
                                  std::optional<std::size_t> bound = std::nullopt);

}  // namespace pcx
