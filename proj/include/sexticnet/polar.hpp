#pragma once

#include <array>
#include <utility>

#include "sexticnet/matrix.hpp"
#include "sexticnet/multipoly.hpp"
#include "sexticnet/points.hpp"
#include "sexticnet/rng.hpp"

namespace sexticnet {

// Cubic form in x0..x5, optionally carrying a deformation parameter t as a
// trailing seventh variable.  Homogeneity (degree 3 in the x's) and
// nonvanishing are enforced at construction.
class CubicFourfold {
public:
    explicit CubicFourfold(MultiPoly f);

    const MultiPoly& form() const { return f_; }
    bool has_parameter() const { return f_.arity() == 7; }

    // Specializes t; identity when there is no parameter.
    CubicFourfold specialized(const Scalar& t0) const;

    static CubicFourfold fermat();

private:
    MultiPoly f_;
};

// A quadric in P^5 held in both views: the quadratic polynomial q and the
// symmetric 6x6 coefficient matrix with q(x) = x^T M x.  Matrix entries are
// polynomials in t alone (constants when the quadric has no parameter).
class QuadraticForm {
public:
    explicit QuadraticForm(MultiPoly q);

    const MultiPoly& form() const { return q_; }
    const PolyMatrix& matrix() const { return m_; }
    bool has_parameter() const { return q_.arity() == 7; }
    bool is_zero() const { return q_.is_zero(); }

    QuadraticForm specialized(const Scalar& t0) const;

    // Coefficients in the fixed degree-2 monomial order (21 entries);
    // requires no parameter.
    std::vector<Scalar> coeff_vector() const;

    bool operator==(const QuadraticForm& o) const { return q_ == o.q_; }

private:
    MultiPoly q_;
    PolyMatrix m_;
};

// The tuple (dF/dx0, ..., dF/dx5).
std::array<QuadraticForm, 6> partials(const CubicFourfold& f);

// dim of the span of the six partials = rank of their 6x21 coefficient
// matrix.  Requires a parameter-free cubic.
int polar_dimension(const CubicFourfold& f);

// For a t-dependent cubic: the dimension at a random rational t drawn from
// the given stream; returns (dimension, the t used) so reports can echo it.
std::pair<int, Scalar> polar_dimension_generic(const CubicFourfold& f, Rng& rng);

// The polar quadric sum p_i dF/dx_i attached to a point of P^5.  The zero
// form is a legal result (p in the dependency locus); p = 0 is not a point.
QuadraticForm polar_quadric(const CubicFourfold& f, const std::vector<Scalar>& p);

}  // namespace sexticnet
