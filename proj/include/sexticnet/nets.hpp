#pragma once

#include <array>

#include "sexticnet/polar.hpp"

namespace sexticnet {

struct DegenerateNet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A plane in P^5 held in both representations: a 3x6 parametrization (rows
// span the plane) and 3 linear equations annihilating it.  Rows of both are
// kept as canonical primitive integer vectors.
class PlaneInP5 {
public:
    static PlaneInP5 from_parametrization(const ScalarMatrix& rows);
    static PlaneInP5 from_equations(const ScalarMatrix& eqs);

    const ScalarMatrix& parametrization() const { return param_; }
    const ScalarMatrix& equations() const { return eqs_; }

    // Plane point (3 coords) -> P^5 point via the parametrization rows.
    std::vector<Scalar> embed(const std::vector<Scalar>& plane_point) const;

    // The i-th coordinate function of P^5 restricted to the plane, as a
    // linear form in (l0, l1, l2).
    MultiPoly restricted_coordinate(int i) const;

private:
    PlaneInP5(ScalarMatrix param, ScalarMatrix eqs) : param_(std::move(param)), eqs_(std::move(eqs)) {}
    ScalarMatrix param_, eqs_;
};

// Fills in the missing representation of a plane given one of them.
PlaneInP5 plane_conversion(const ScalarMatrix& given, bool is_parametrization);

// Ordered triple of symmetric 6x6 matrices spanning a net of quadrics; matrix
// entries are constants or polynomials in t.  Linear independence of the
// three quadrics is certified at construction (for t-dependent nets, by
// specializing t at enough sample values to rule every minor in or out).
class NetOfQuadrics {
public:
    NetOfQuadrics(const QuadraticForm& q0, const QuadraticForm& q1, const QuadraticForm& q2);

    const QuadraticForm& quadric(int k) const { return quadrics_[k]; }
    bool has_parameter() const { return quadrics_[0].has_parameter(); }

    // 6x6 matrix of the moving quadric l0*M0 + l1*M1 + l2*M2; entries in
    // (l0, l1, l2) plus trailing t when parametric.
    PolyMatrix pencil_matrix() const;

    // Net with quadrics recombined by a 3x3 matrix: M'_j = sum_k A(k,j) M_k.
    NetOfQuadrics recombined(const ScalarMatrix& a) const;

    // Row-span equality of the 3x21 coefficient matrices (net as a point of
    // the Grassmannian, forgetting the ordering).
    bool same_span(const NetOfQuadrics& o) const;

private:
    std::array<QuadraticForm, 3> quadrics_;
};

// Discriminant curve of a net: a ternary sextic, or the improper-intersection
// flag when the determinant vanishes identically (the net lies inside the
// discriminant hypersurface).
struct PlaneSextic {
    MultiPoly poly;   // arity 3, or 4 with trailing t
    bool improper;    // det identically zero
    bool has_parameter() const { return poly.arity() == 4; }
};

// The net of polar quadrics cut by a plane: quadrics at the three
// parametrization rows.  Throws DegenerateNet when the rows or the resulting
// quadrics are dependent.
NetOfQuadrics net_from_plane(const CubicFourfold& f, const PlaneInP5& plane);

PlaneSextic discriminant_sextic(const NetOfQuadrics& net);

// 6x6 symmetric matrix of the general polar quadric sum y_l * M(dF/dx_l);
// entries linear in y0..y5, with trailing t when F carries the parameter.
PolyMatrix general_polar_matrix(const CubicFourfold& f);

// det of the above: the discriminant of the whole polar system, in y0..y5
// (and t).  Restricting it to a plane recovers discriminant_sextic.
MultiPoly full_polar_discriminant(const CubicFourfold& f);

// Restriction of the full discriminant along the plane: substitutes
// y_i -> (plane coordinate form i).  Equals the determinant route exactly.
MultiPoly restrict_discriminant(const MultiPoly& full, const PlaneInP5& plane);

}  // namespace sexticnet
