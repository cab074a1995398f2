#include "sexticnet/polar.hpp"

namespace sexticnet {

namespace {

// Coefficient of the x-monomial with exponents (ei at i, ej at j) in a form of
// arity 6 or 7 (t trailing), as a polynomial in t alone.
MultiPoly x_coefficient(const MultiPoly& q, int i, int j) {
    const int extra = q.arity() - 6;
    MultiPoly out(extra, q.modulus());
    for (const auto& [e, c] : q.terms()) {
        ExpVec want(6, 0);
        want[i] += 1;
        want[j] += 1;
        bool match = true;
        for (int k = 0; k < 6; ++k) {
            if (e[k] != want[k]) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        out.add_term(ExpVec(e.begin() + 6, e.end()), c);
    }
    return out;
}

}  // namespace

CubicFourfold::CubicFourfold(MultiPoly f) : f_(std::move(f)) {
    if (f_.arity() != 6 && f_.arity() != 7) throw ShapeError("CubicFourfold: expected 6 variables (plus optional t)");
    if (f_.is_zero()) throw std::invalid_argument("CubicFourfold: zero polynomial");
    if (f_.homogeneous_degree_in_first(6) != 3)
        throw std::invalid_argument("CubicFourfold: form is not homogeneous of degree 3 in x0..x5");
}

CubicFourfold CubicFourfold::specialized(const Scalar& t0) const {
    if (!has_parameter()) return *this;
    return CubicFourfold(f_.substitute_last(t0));
}

CubicFourfold CubicFourfold::fermat() {
    MultiPoly f(6);
    for (int i = 0; i < 6; ++i) {
        ExpVec e(6, 0);
        e[i] = 3;
        f.add_term(std::move(e), Scalar::integer(1));
    }
    return CubicFourfold(std::move(f));
}

namespace {

MultiPoly validated_quadric(MultiPoly q) {
    if (q.arity() != 6 && q.arity() != 7) throw ShapeError("QuadraticForm: expected 6 variables (plus optional t)");
    if (!q.is_zero() && q.homogeneous_degree_in_first(6) != 2)
        throw std::invalid_argument("QuadraticForm: form is not homogeneous of degree 2 in x0..x5");
    return q;
}

}  // namespace

QuadraticForm::QuadraticForm(MultiPoly q)
    : q_(validated_quadric(std::move(q))), m_(6, 6, MultiPoly::zero(q_.arity() - 6, q_.modulus())) {
    Scalar half = q_.modulus() == 0 ? Scalar::fraction(1, 2) : Scalar::mod(2, q_.modulus()).inverse();
    for (int i = 0; i < 6; ++i) {
        for (int j = i; j < 6; ++j) {
            MultiPoly c = x_coefficient(q_, i, j);
            if (i == j) {
                m_(i, i) = c;
            } else {
                m_(i, j) = c.scaled(half);
                m_(j, i) = m_(i, j);
            }
        }
    }
}

QuadraticForm QuadraticForm::specialized(const Scalar& t0) const {
    if (!has_parameter()) return *this;
    return QuadraticForm(q_.substitute_last(t0));
}

std::vector<Scalar> QuadraticForm::coeff_vector() const {
    if (has_parameter()) throw ShapeError("QuadraticForm: coefficient vector of a t-dependent form");
    std::vector<Scalar> out;
    for (const ExpVec& e : monomials(6, 2)) out.push_back(q_.coeff(e));
    return out;
}

std::array<QuadraticForm, 6> partials(const CubicFourfold& f) {
    return {QuadraticForm(f.form().derivative(0)), QuadraticForm(f.form().derivative(1)),
            QuadraticForm(f.form().derivative(2)), QuadraticForm(f.form().derivative(3)),
            QuadraticForm(f.form().derivative(4)), QuadraticForm(f.form().derivative(5))};
}

namespace {

ScalarMatrix partials_coeff_matrix(const CubicFourfold& f) {
    auto ps = partials(f);
    const auto mons = monomials(6, 2);
    ScalarMatrix m(6, 21, Scalar());
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 21; ++j) m(i, j) = ps[i].form().coeff(mons[j]);
    }
    return m;
}

}  // namespace

int polar_dimension(const CubicFourfold& f) {
    if (f.has_parameter()) throw ShapeError("polar_dimension: specialize t first (or use polar_dimension_generic)");
    return rank(partials_coeff_matrix(f));
}

std::pair<int, Scalar> polar_dimension_generic(const CubicFourfold& f, Rng& rng) {
    if (!f.has_parameter()) return {polar_dimension(f), Scalar()};
    Scalar t0 = rng.nonzero_rational(1000);
    return {polar_dimension(f.specialized(t0)), t0};
}

QuadraticForm polar_quadric(const CubicFourfold& f, const std::vector<Scalar>& p) {
    if (p.size() != 6) throw InvalidPoint("polar_quadric: point must have 6 coordinates");
    if (is_zero_vector(p)) throw InvalidPoint("polar_quadric: zero vector is not a point of P^5");
    MultiPoly q(f.form().arity(), f.form().modulus());
    for (int i = 0; i < 6; ++i) {
        if (p[i].is_zero()) continue;
        q += f.form().derivative(i).scaled(p[i]);
    }
    return QuadraticForm(std::move(q));
}

}  // namespace sexticnet
