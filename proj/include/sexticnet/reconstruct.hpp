#pragma once

#include "sexticnet/nets.hpp"
#include "sexticnet/polar.hpp"
#include "sexticnet/rng.hpp"

namespace sexticnet {

// Prescription dF/dx_{slot} = s * Q for a list of distinct slots.  The
// scalars s are unknowns of the integration problem, one per slot.
class SlotAssignment {
public:
    SlotAssignment(std::vector<std::pair<int, QuadraticForm>> slots);

    const std::vector<std::pair<int, QuadraticForm>>& slots() const { return slots_; }
    int count() const { return static_cast<int>(slots_.size()); }

private:
    std::vector<std::pair<int, QuadraticForm>> slots_;
};

// Solutions of the homogeneous linear system in the 56 cubic coefficients
// plus one scalar per slot.  Unknown order: the 56 coefficients in the fixed
// graded-lex cubic monomial order, then s_0..s_{L-1}; the kernel basis is the
// canonical reduced-echelon one.
struct IntegrationResult {
    std::vector<std::vector<Scalar>> kernel;
    int affine_dim = 0;
    int projective_dim = -1;
    bool all_scalars_nonzero = false;
    uint64_t witness_prime = 0;

    static std::vector<Scalar> cubic_part(const std::vector<Scalar>& v) {
        return std::vector<Scalar>(v.begin(), v.begin() + 56);
    }
    static std::vector<Scalar> scalar_part(const std::vector<Scalar>& v) {
        return std::vector<Scalar>(v.begin() + 56, v.end());
    }

    // Reassembles the cubic form of a kernel element.
    static MultiPoly cubic_form(const std::vector<Scalar>& v);
};

// The homogeneous system behind integrate_net: 21 rows per slot equating the
// partial's coefficients with s_l times the quadric's, over the 56 + L
// unknowns.
ScalarMatrix integration_matrix(const SlotAssignment& assignment);

IntegrationResult integrate_net(const SlotAssignment& assignment, Rng& rng);

struct FiberReport {
    IntegrationResult integration;
    bool member = false;          // the given F lies in the solution family
    bool projective_dim_is_10 = false;
};

// Fiber of the incidence correspondence over the net cut by the plane:
// integrates the net at the given slots and checks membership of F itself.
// The assignment quadrics must be exactly the net's quadrics.
FiberReport fiber_dimension_report(const CubicFourfold& f, const PlaneInP5& plane, const SlotAssignment& assignment,
                                   Rng& rng);

}  // namespace sexticnet
