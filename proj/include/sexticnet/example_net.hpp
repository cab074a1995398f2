#pragma once

#include "sexticnet/reconstruct.hpp"

namespace sexticnet {

// The worked example net: three explicit quadrics in P^5 whose common
// integral is an 11-dimensional family of cubics (projective dimension 10),
// with the scalar relations s1 = 3 s0 and s2 = 3 s1 forced.
inline const char* kExampleQ0 =
    "3*x0^2 + 2*x0*x5 + 3*x1^2 + 4*x1*x4 + 16*x2*x3 + 4*x2*x5 + x3*x5 + 6*x1*x5";
inline const char* kExampleQ1 =
    "2*x0*x1 + 4/3*x0*x4 + 2*x0*x5 + 2*x1*x5 + 3*x2^2 + 3*x3^2 + 2*x3*x4 + 6*x4*x5 + 3*x2*x3";
inline const char* kExampleQ2 =
    "16/9*x0*x3 + 4/9*x0*x5 + 2*x1*x2 + x1*x3 - 2*x2*x5 + 3*x4^2 + 3*x5^2";

// Closed-form member of the family (unit scale, free cubic part omitted).
inline const char* kExampleCubic =
    "x0^3 + x0^2*x5 + 3*x0*x1^2 + 4*x0*x1*x4 + 16*x0*x2*x3 + 4*x0*x2*x5 + x0*x3*x5 + 6*x0*x1*x5"
    " + 3*x1^2*x5 + 9*x1*x2^2 + 9*x1*x3^2 + 6*x1*x3*x4 + 18*x1*x4*x5 + 9*x1*x2*x3"
    " - 9*x2^2*x5 + 27*x2*x4^2 + 27*x2*x5^2";

SlotAssignment example_net_assignment();

}  // namespace sexticnet
