#pragma once

#include <string>
#include <vector>

#include "sexticnet/scalar.hpp"

namespace sexticnet {

struct InvalidPoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Canonical representative of a projective point: over Q an integer-cleared
// primitive vector with positive first nonzero entry; over F_p scaled so the
// first nonzero entry is 1.  Throws InvalidPoint on the zero vector.
std::vector<Scalar> canonicalize_point(const std::vector<Scalar>& p);

// Integer-cleared primitive vector keeping the given orientation (no sign
// rule); identity on F_p vectors.
std::vector<Scalar> primitive_vector(const std::vector<Scalar>& p);

bool is_zero_vector(const std::vector<Scalar>& p);

// "1,-2,0/3" -> scalars; ';'-separated lists handled by parse_points.
std::vector<Scalar> parse_point(const std::string& text);
std::vector<std::vector<Scalar>> parse_points(const std::string& text);

std::string print_point(const std::vector<Scalar>& p);

}  // namespace sexticnet
