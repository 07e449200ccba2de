#pragma once

// The compact space-spec grammar used by the CLI:
//   lp:p=2 | lorentz:w=harmonic,p=2 | blockt:params=<file>
//   | symhull:blockt:params=<file> | james:<base spec>

#include "jameslab/duality.hpp"
#include "jameslab/norms.hpp"

#include <string>

namespace jameslab {

/// Parses a base norm spec (no james: prefix allowed).
NormSpec parse_norm_spec(const std::string& text);

/// Parses a primal space; a james: prefix wraps the base norm.
PrimalSpace parse_space_spec(const std::string& text);

} // namespace jameslab
