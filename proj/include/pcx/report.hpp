#pragma once

// Commands and certificates.
//
// run_command evaluates one subcommand on a parsed job and returns a JSON
// report: verdict, justification, checks, witnesses and params. Every check
// that carries a "claim" can be replayed from the serialized witnesses alone;
// verify_certificate does exactly that and nothing else.
//
// Claim kinds: square_zero, minimal, chain_map, homotopy, equal, invertible,
// strictly_lower, quasi_iso, resolution, degrees_occupied, no_gradable_shape,
// end_dim, local_end, nontrivial_idempotent, no_invertible_map,
// naturality_unsolvable, orbit_hom, homology, hom_dim, is_compression, all.
// Map expressions are lists of terms {"c": scalar, "p": [factor, ...]} read
// as c * p[0] * p[1] * ...; a factor is a map name, "1:X" (identity of
// object X) or "d:X" (differential of object X).

#include "pcx/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcx {

struct RunOptions {
  SearchCaps caps;
  std::optional<std::size_t> resolution_bound;  // default: dim of the algebra
  bool strict = false;
};

const std::vector<std::string>& command_names();

/// Never throws for core errors: they come back as {"verdict": "ERROR", "error": {...}}.
json run_command(const std::string& command, const Job& job, const RunOptions& options = {});

/// Replays every claim against the certificate's own witnesses.
json verify_certificate(const json& certificate);

/// 0 ok, 2 parse error, 3 semantic error or rejected certificate, 4 UNKNOWN under strict.
int exit_code(const json& report, bool strict);

}  // namespace pcx
