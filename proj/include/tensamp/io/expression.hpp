#pragma once

// Divisor class specs on the command line: either a comma-separated list of
// exact rationals ("1,-2/3"), or a linear expression in basis names, curve
// names and K ("-K", "2*H - E1", "C0 + 3/2 f").

#include <string>

#include "tensamp/surface/model.hpp"

namespace tensamp {

/// Coefficient lists of the wrong length raise UsageError; unknown symbols
/// and malformed text raise ParseError.
DivisorClass parse_class_spec(const SurfaceModel& m, const std::string& text);

/// Comma-separated integers ("1,-1"). ParseError on anything else.
std::vector<long> parse_integer_list(const std::string& text);

}  // namespace tensamp
