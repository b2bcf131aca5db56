// ============================================================================
// cli.hpp -- command-line front end
//
// Subcommands:
//   check   classify a symplectic matrix for a (p, q) pair, optional weight
//   factor  factor a symplectic matrix into swaps * chirp * dilation * shear
//   norm    closed-form mixed norm of the dilated Gaussian witness
//   sweep   epsilon sweep + exponent fit from a JSON config
//   verify  discrete/closed-form agreement and covariance self-checks
//
// Exit codes: 0 success, 1 usage error, 2 numerical or validation error.
// ============================================================================
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdil {

// args excludes the program name and is in natural order
int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err);

} // namespace symdil
