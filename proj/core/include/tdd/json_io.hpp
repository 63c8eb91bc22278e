#pragma once

#include <iosfwd>
#include <string>

#include "tdd/state.hpp"

namespace tdd {

// Serializes a state as {"matrix": [[[re, im], x4] x4]}, row-major in the
// basis |00>, |01>, |10>, |11>.
std::string write_state_json(const DensityMatrix& rho);

// Parses and validates a state in the same schema.  Malformed syntax, a
// missing/mis-shaped "matrix" field, or non-numeric entries raise ParseError
// naming the offending location; physical-constraint failures propagate from
// validate().
DensityMatrix read_state_json(std::istream& in,
                              const StateTolerances& tol = {});
DensityMatrix read_state_json_text(const std::string& text,
                                   const StateTolerances& tol = {});

}  // namespace tdd
