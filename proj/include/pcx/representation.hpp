#pragma once

// Right modules as quiver representations. An arrow a: u -> w acts as a
// linear map M_w -> M_u, stored as a dims[u] x dims[w] matrix on column
// vectors. For a path x = a_0 a_1 ... a_k (a_k applied first) the right
// action m.x applies a_0 first.

#include "pcx/projective.hpp"

#include <optional>
#include <vector>

namespace pcx {

struct Representation {
  AlgebraPtr A;
  std::vector<std::size_t> dims;  // per vertex
  std::vector<Matrix> act;        // per arrow

  static Representation zero(AlgebraPtr A);
  static Representation simple(AlgebraPtr A, int v);

  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  /// Action of a path (word) as a map M_target -> M_source.
  Matrix act_word(const Word& w) const;
  Matrix act_path(std::size_t basis_index) const;
  /// Throws SHAPE_MISMATCH if dimensions are inconsistent or a relation acts nonzero.
  void validate() const;
  std::string describe() const;
};

struct RepMap {
  std::vector<Matrix> comp;  // per vertex, target dim x source dim

  static RepMap zero(const Representation& M, const Representation& N);
  static RepMap identity(const Representation& M);
  bool is_zero() const;
  /// f commutes with every arrow action.
  bool is_homomorphism(const Representation& M, const Representation& N) const;
  RepMap operator-() const;
  RepMap& operator+=(const RepMap& o);
  RepMap scaled(const Scalar& s) const;
  friend RepMap operator+(RepMap a, const RepMap& b) { return a += b; }
  friend RepMap operator-(RepMap a, const RepMap& b) { return a += -b; }
  /// g * f = g after f.
  friend RepMap operator*(const RepMap& g, const RepMap& f);
  friend bool operator==(const RepMap& a, const RepMap& b) { return a.comp == b.comp; }
};

Representation direct_sum(const Representation& M, const Representation& N);
RepMap direct_sum(const RepMap& f, const RepMap& g);

/// Basis of P_v at vertex u: the paths from u to v. For a sum of projectives
/// the bases of the summands are concatenated in order.
Representation eval_proj(const AlgebraPtr& A, const ProjModule& P);
RepMap eval_projmap(const ProjMap& f);
/// Offset of summand i inside eval_proj(P) at vertex u.
std::size_t proj_offset(const PathAlgebra& A, const ProjModule& P, std::size_t summand, int u);

/// The map P -> M sending the generator e_{v_i} of summand i to gens[i] (a column in M_{v_i}).
RepMap map_from_generators(const ProjModule& P, const Representation& M, const std::vector<Matrix>& gens);
/// The same when M = eval_proj(Q): the result as a map of projectives.
ProjMap projmap_from_generators(const AlgebraPtr& A, const ProjModule& P, const ProjModule& Q,
                                const std::vector<Matrix>& gens);
/// Image of the generator of summand i under a map out of eval_proj(P).
Matrix generator_image(const AlgebraPtr& A, const ProjModule& P, const RepMap& f, std::size_t summand);
/// Converts a map eval_proj(P) -> eval_proj(Q) back into a ProjMap.
ProjMap to_projmap(const AlgebraPtr& A, const ProjModule& P, const ProjModule& Q, const RepMap& f);

std::vector<RepMap> hom_space(const Representation& M, const Representation& N);

/// Submodule or image together with its inclusion into the ambient module.
struct Subobject {
  Representation rep;
  RepMap inclusion;
};

/// f with image inside S, as a map into S.rep. Throws SHAPE_MISMATCH if it does not factor.
RepMap corestrict(const Subobject& S, const RepMap& f);

struct KernelImage {
  Subobject kernel;
  Subobject image;
};

KernelImage kernel_image(const Representation& M, const Representation& N, const RepMap& f);
/// Submodule spanned by given columns at each vertex (must be closed under the action).
Subobject submodule(const Representation& M, const std::vector<Matrix>& spans);

struct Quotient {
  Representation rep;
  RepMap projection;  // M -> M/S
  std::vector<Matrix> section;  // per vertex, columns of M_v lifting the quotient basis
};
Quotient quotient(const Representation& M, const Subobject& S);

struct Cover {
  ProjModule top;
  RepMap map;  // eval_proj(top) -> M, surjective
  std::vector<Matrix> generators;
};
/// Projective cover through a basis of M / M.rad.
Cover top_and_cover(const Representation& M);

/// Some g with pi * g = f, for f: eval_proj(P) -> N and pi: M -> N surjective
/// onto the image of f. nullopt if f does not factor.
std::optional<RepMap> lift(const ProjModule& P, const Representation& M, const RepMap& pi, const RepMap& f);

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0.
struct Resolution {
  std::vector<ProjModule> terms;  // P_0, P_1, ...
  std::vector<ProjMap> maps;      // maps[k-1]: P_k -> P_{k-1}
  RepMap augmentation;            // eval_proj(P_0) -> M
};

/// Throws GLDIM_BOUND_EXCEEDED if P_bound has a nonzero kernel. Default bound: dim of the algebra.
Resolution proj_resolution(const Representation& M, std::optional<std::size_t> bound = std::nullopt);

}  // namespace pcx
