#include "sexticnet/nets.hpp"

namespace sexticnet {

namespace {

// Rows cleared to primitive integer vectors; the caller's orientation is
// kept so explicit parametrizations survive verbatim.
ScalarMatrix primitive_rows(const ScalarMatrix& m) {
    ScalarMatrix out = m;
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<Scalar> row;
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        row = primitive_vector(row);
        for (int j = 0; j < m.cols(); ++j) out(i, j) = row[j];
    }
    return out;
}

ScalarMatrix canonical_rows(const ScalarMatrix& m) {
    ScalarMatrix out = m;
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<Scalar> row;
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        row = canonicalize_point(row);
        for (int j = 0; j < m.cols(); ++j) out(i, j) = row[j];
    }
    return out;
}

ScalarMatrix kernel_rows(const ScalarMatrix& m) {
    auto basis = kernel_basis(m);
    ScalarMatrix out(static_cast<int>(basis.size()), m.cols(), Scalar());
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = basis[i][j];
    return out;
}

}  // namespace

PlaneInP5 PlaneInP5::from_parametrization(const ScalarMatrix& rows) {
    if (rows.rows() != 3 || rows.cols() != 6) throw ShapeError("PlaneInP5: parametrization must be 3x6");
    if (rank(rows) != 3) throw ShapeError("PlaneInP5: parametrization has rank < 3");
    ScalarMatrix param = primitive_rows(rows);
    ScalarMatrix eqs = canonical_rows(kernel_rows(param));
    return PlaneInP5(std::move(param), std::move(eqs));
}

PlaneInP5 PlaneInP5::from_equations(const ScalarMatrix& eqs) {
    if (eqs.rows() != 3 || eqs.cols() != 6) throw ShapeError("PlaneInP5: equations must be 3x6");
    if (rank(eqs) != 3) throw ShapeError("PlaneInP5: equations have rank < 3");
    ScalarMatrix e = primitive_rows(eqs);
    ScalarMatrix param = canonical_rows(kernel_rows(e));
    return PlaneInP5(std::move(param), std::move(e));
}

std::vector<Scalar> PlaneInP5::embed(const std::vector<Scalar>& plane_point) const {
    if (plane_point.size() != 3) throw InvalidPoint("PlaneInP5: plane point must have 3 coordinates");
    std::vector<Scalar> out(6, Scalar::zero_like(plane_point[0]));
    for (int j = 0; j < 6; ++j) {
        for (int i = 0; i < 3; ++i) out[j] += plane_point[i] * param_(i, j);
    }
    return out;
}

MultiPoly PlaneInP5::restricted_coordinate(int i) const {
    MultiPoly f(3);
    for (int r = 0; r < 3; ++r) {
        ExpVec e(3, 0);
        e[r] = 1;
        f.add_term(std::move(e), param_(r, i));
    }
    return f;
}

PlaneInP5 plane_conversion(const ScalarMatrix& given, bool is_parametrization) {
    return is_parametrization ? PlaneInP5::from_parametrization(given) : PlaneInP5::from_equations(given);
}

namespace {

// 3x21 coefficient matrix of the three quadrics (parameter-free case).
ScalarMatrix net_coeff_matrix(const std::array<QuadraticForm, 3>& qs) {
    ScalarMatrix m(3, 21, Scalar());
    for (int i = 0; i < 3; ++i) {
        auto row = qs[i].coeff_vector();
        for (int j = 0; j < 21; ++j) m(i, j) = row[j];
    }
    return m;
}

// Independence of three t-dependent quadrics over Q(t).  Every 3x3 minor of
// the coefficient matrix has t-degree <= 3*max entry degree, so rank 3 at any
// of (that many + 1) sample points decides generic independence exactly.
bool independent_generic(const std::array<QuadraticForm, 3>& qs) {
    int maxdeg = 0;
    for (const auto& q : qs) maxdeg = std::max(maxdeg, std::max(0, q.form().degree_in(6)));
    int samples = 3 * maxdeg + 1;
    for (int s = 0; s < samples; ++s) {
        std::array<QuadraticForm, 3> sp{qs[0].specialized(Scalar::integer(s)), qs[1].specialized(Scalar::integer(s)),
                                        qs[2].specialized(Scalar::integer(s))};
        if (rank(net_coeff_matrix(sp)) == 3) return true;
    }
    return false;
}

}  // namespace

NetOfQuadrics::NetOfQuadrics(const QuadraticForm& q0, const QuadraticForm& q1, const QuadraticForm& q2)
    : quadrics_{q0, q1, q2} {
    bool param = q0.has_parameter();
    if (q1.has_parameter() != param || q2.has_parameter() != param)
        throw ShapeError("NetOfQuadrics: mixed parameter-free and t-dependent quadrics");
    bool ok = param ? independent_generic(quadrics_) : rank(net_coeff_matrix(quadrics_)) == 3;
    if (!ok) throw DegenerateNet("NetOfQuadrics: quadrics are linearly dependent");
}

PolyMatrix NetOfQuadrics::pencil_matrix() const {
    const bool param = has_parameter();
    const int arity = param ? 4 : 3;  // (l0, l1, l2 [, t])
    PolyMatrix out(6, 6, MultiPoly::zero(arity));
    for (int k = 0; k < 3; ++k) {
        const PolyMatrix& mk = quadrics_[k].matrix();
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                if (mk(i, j).is_zero()) continue;
                // entry (const or in t) lifted into (l, t), times l_k
                MultiPoly lifted = param ? mk(i, j).rename_vars(arity, {3}) : mk(i, j).rename_vars(arity, {});
                out(i, j) += lifted * MultiPoly::variable(arity, k);
            }
        }
    }
    return out;
}

NetOfQuadrics NetOfQuadrics::recombined(const ScalarMatrix& a) const {
    if (a.rows() != 3 || a.cols() != 3) throw ShapeError("NetOfQuadrics: recombination matrix must be 3x3");
    if (det(a).is_zero()) throw DegenerateNet("NetOfQuadrics: singular recombination");
    std::array<MultiPoly, 3> forms{MultiPoly::zero(quadrics_[0].form().arity()),
                                   MultiPoly::zero(quadrics_[0].form().arity()),
                                   MultiPoly::zero(quadrics_[0].form().arity())};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            if (a(k, j).is_zero()) continue;
            forms[j] += quadrics_[k].form().scaled(a(k, j));
        }
    }
    return NetOfQuadrics(QuadraticForm(forms[0]), QuadraticForm(forms[1]), QuadraticForm(forms[2]));
}

bool NetOfQuadrics::same_span(const NetOfQuadrics& o) const {
    if (has_parameter() || o.has_parameter()) throw ShapeError("NetOfQuadrics: span comparison needs parameter-free nets");
    ScalarMatrix a = net_coeff_matrix(quadrics_);
    ScalarMatrix b = net_coeff_matrix(o.quadrics_);
    return rref(a) == rref(b);
}

NetOfQuadrics net_from_plane(const CubicFourfold& f, const PlaneInP5& plane) {
    std::array<std::vector<Scalar>, 3> rows;
    for (int i = 0; i < 3; ++i) {
        rows[i].reserve(6);
        for (int j = 0; j < 6; ++j) rows[i].push_back(plane.parametrization()(i, j));
    }
    return NetOfQuadrics(polar_quadric(f, rows[0]), polar_quadric(f, rows[1]), polar_quadric(f, rows[2]));
}

PlaneSextic discriminant_sextic(const NetOfQuadrics& net) {
    MultiPoly d = det_poly_matrix(net.pencil_matrix());
    return PlaneSextic{d, d.is_zero()};
}

PolyMatrix general_polar_matrix(const CubicFourfold& f) {
    const bool param = f.has_parameter();
    const int arity = param ? 7 : 6;  // (y0..y5 [, t])
    auto ps = partials(f);
    PolyMatrix out(6, 6, MultiPoly::zero(arity));
    for (int l = 0; l < 6; ++l) {
        const PolyMatrix& ml = ps[l].matrix();
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                if (ml(i, j).is_zero()) continue;
                MultiPoly lifted = param ? ml(i, j).rename_vars(arity, {6}) : ml(i, j).rename_vars(arity, {});
                out(i, j) += lifted * MultiPoly::variable(arity, l);
            }
        }
    }
    return out;
}

MultiPoly full_polar_discriminant(const CubicFourfold& f) { return det_poly_matrix(general_polar_matrix(f)); }

MultiPoly restrict_discriminant(const MultiPoly& full, const PlaneInP5& plane) {
    if (full.arity() != 6) throw ShapeError("restrict_discriminant: expected a parameter-free discriminant");
    std::vector<MultiPoly> images;
    images.reserve(6);
    for (int i = 0; i < 6; ++i) images.push_back(plane.restricted_coordinate(i));
    return full.substitute(images);
}

}  // namespace sexticnet
