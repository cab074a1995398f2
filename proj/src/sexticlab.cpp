#include "sexticnet/sexticlab.hpp"

#include <algorithm>

namespace sexticnet {

SingularReport jacobian_scheme_degree(const MultiPoly& c, uint64_t field_prime) {
    if (c.arity() != 3) throw ShapeError("jacobian_scheme_degree: expected a ternary form");
    if (c.is_zero()) throw std::invalid_argument("jacobian_scheme_degree: zero form");
    MultiPoly f = c;
    if (field_prime != 0 && f.modulus() == 0) f = f.reduce_mod(field_prime);
    if (f.is_zero()) throw std::invalid_argument("jacobian_scheme_degree: form vanishes mod p");
    if (field_prime == 0 && f.modulus() != 0) field_prime = f.modulus();
    auto d_opt = f.homogeneous_degree_in_first(3);
    if (!d_opt) throw std::invalid_argument("jacobian_scheme_degree: form is not homogeneous");
    int d = *d_opt;

    SingularReport rep;
    rep.curve_degree = d;
    rep.field_prime = field_prime;
    if (d <= 1) {
        // a line is smooth; its Jacobian ideal is the whole ring
        rep.stabilized = true;
        rep.delta = 0;
        rep.window = {0, 1, 2};
        rep.hilbert = {0, 0, 0};
        return rep;
    }

    std::array<MultiPoly, 3> parts{f.derivative(0), f.derivative(1), f.derivative(2)};
    for (int k = 0; k < 3; ++k) {
        int m = 3 * (d - 2) + 1 + k;
        rep.window[k] = m;
        const auto rows_mons = monomials(3, m - (d - 1));
        const auto col_mons = monomials(3, m);
        std::map<ExpVec, int, GradedLexLess> col_index;
        for (size_t i = 0; i < col_mons.size(); ++i) col_index[col_mons[i]] = static_cast<int>(i);

        Scalar zero = field_prime == 0 ? Scalar() : Scalar::mod(0, field_prime);
        ScalarMatrix mat(3 * static_cast<int>(rows_mons.size()), static_cast<int>(col_mons.size()), zero);
        int row = 0;
        for (const auto& part : parts) {
            for (const auto& mu : rows_mons) {
                for (const auto& [e, coeff] : part.terms()) {
                    ExpVec shifted(3);
                    for (int i = 0; i < 3; ++i) shifted[i] = e[i] + mu[i];
                    mat(row, col_index.at(shifted)) = coeff;
                }
                ++row;
            }
        }
        rep.hilbert[k] = static_cast<long>(col_mons.size()) - rank(mat);
    }
    rep.stabilized = rep.hilbert[0] == rep.hilbert[1] && rep.hilbert[1] == rep.hilbert[2];
    rep.delta = rep.stabilized ? rep.hilbert[0] : -1;
    return rep;
}

namespace {

// Invertible 3x3 matrix whose last column is the point.
ScalarMatrix frame_at(const std::vector<Scalar>& pt) {
    int j0 = -1;
    for (int i = 0; i < 3; ++i) {
        if (!pt[i].is_zero()) {
            j0 = i;
            break;
        }
    }
    if (j0 < 0) throw InvalidPoint("frame_at: zero point");
    Scalar zero = Scalar::zero_like(pt[0]);
    Scalar one = Scalar::one_like(pt[0]);
    ScalarMatrix a(3, 3, zero);
    int col = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == j0) continue;
        a(i, col++) = one;
    }
    for (int i = 0; i < 3; ++i) a(i, 2) = pt[i];
    return a;
}

}  // namespace

LocalType classify_singular_point(const MultiPoly& c, const std::vector<Scalar>& point) {
    if (c.arity() != 3) throw ShapeError("classify_singular_point: expected a ternary form");
    if (point.size() != 3) throw InvalidPoint("classify_singular_point: expected a plane point");
    MultiPoly f = c;
    uint64_t p = point[0].modulus();
    if (f.modulus() == 0 && p != 0) f = f.reduce_mod(p);

    ScalarMatrix a = frame_at(point);
    std::vector<MultiPoly> images;
    for (int i = 0; i < 3; ++i) {
        MultiPoly img(3);
        for (int j = 0; j < 3; ++j) {
            ExpVec e(3, 0);
            e[j] = 1;
            img.add_term(std::move(e), a(i, j));
        }
        images.push_back(img);
    }
    MultiPoly moved = f.substitute(images);  // point now at (0:0:1)

    // local expansion: group by total degree in the first two variables
    Scalar zero = Scalar::zero_like(point[0]);
    Scalar c00 = zero, c10 = zero, c01 = zero, c20 = zero, c11 = zero, c02 = zero;
    for (const auto& [e, coeff] : moved.terms()) {
        uint32_t du = e[0], dv = e[1];
        if (du + dv == 0) c00 += coeff;
        else if (du == 1 && dv == 0) c10 += coeff;
        else if (du == 0 && dv == 1) c01 += coeff;
        else if (du == 2 && dv == 0) c20 += coeff;
        else if (du == 1 && dv == 1) c11 += coeff;
        else if (du == 0 && dv == 2) c02 += coeff;
    }
    if (!c00.is_zero()) throw InvalidPoint("classify_singular_point: point is not on the curve");
    if (!c10.is_zero() || !c01.is_zero()) return LocalType::Nonsingular;
    // rank of the quadratic part [[2 c20, c11], [c11, 2 c02]]
    Scalar four = Scalar::one_like(zero) + Scalar::one_like(zero);
    four += four;
    Scalar disc = four * c20 * c02 - c11 * c11;
    return disc.is_zero() ? LocalType::NonNode : LocalType::Node;
}

std::pair<int, bool> nodes_impose_independent_conditions(const std::vector<std::vector<Scalar>>& points, int d) {
    if (points.empty()) return {0, true};
    std::vector<std::vector<Scalar>> canon;
    for (const auto& pt : points) {
        if (pt.size() != 3) throw InvalidPoint("nodes_impose_independent_conditions: expected plane points");
        canon.push_back(canonicalize_point(pt));
    }
    for (size_t i = 0; i < canon.size(); ++i)
        for (size_t j = i + 1; j < canon.size(); ++j)
            if (canon[i] == canon[j]) throw std::invalid_argument("nodes_impose_independent_conditions: repeated point");

    const auto mons = monomials(3, d);
    Scalar zero = Scalar::zero_like(canon[0][0]);
    ScalarMatrix m(static_cast<int>(canon.size()), static_cast<int>(mons.size()), zero);
    for (size_t i = 0; i < canon.size(); ++i) {
        for (size_t j = 0; j < mons.size(); ++j) {
            Scalar v = Scalar::one_like(zero);
            for (int k = 0; k < 3; ++k)
                for (uint32_t rep = 0; rep < mons[j][k]; ++rep) v *= canon[i][k];
            m(static_cast<int>(i), static_cast<int>(j)) = v;
        }
    }
    int r = rank(m);
    return {r, r == static_cast<int>(canon.size())};
}

std::vector<std::vector<Scalar>> nodal_cubics_at(const std::vector<Scalar>& v) {
    if (v.size() != 3) throw InvalidPoint("nodal_cubics_at: expected a plane point");
    if (is_zero_vector(v)) throw InvalidPoint("nodal_cubics_at: zero point");
    const auto mons = monomials(3, 3);
    Scalar zero = Scalar::zero_like(v[0]);
    ScalarMatrix cond(3, 10, zero);
    for (int i = 0; i < 3; ++i) {
        for (size_t j = 0; j < mons.size(); ++j) {
            MultiPoly mu = MultiPoly::monomial_of(3, mons[j], Scalar::one_like(zero));
            cond(i, static_cast<int>(j)) = mu.derivative(i).evaluate(v);
        }
    }
    return kernel_basis(cond);
}

std::array<std::vector<Scalar>, 3> triangle_vertices(const std::array<MultiPoly, 3>& t) {
    std::array<std::vector<Scalar>, 3> out;
    for (int k = 0; k < 3; ++k) {
        const MultiPoly& a = t[(k + 1) % 3];
        const MultiPoly& b = t[(k + 2) % 3];
        Scalar zero = Scalar();
        ScalarMatrix m(2, 3, zero);
        for (int j = 0; j < 3; ++j) {
            ExpVec e(3, 0);
            e[j] = 1;
            m(0, j) = a.coeff(e);
            m(1, j) = b.coeff(e);
        }
        auto kb = kernel_basis(m);
        if (kb.size() != 1) throw std::invalid_argument("triangle_vertices: lines are not independent");
        out[k] = canonicalize_point(kb[0]);
    }
    return out;
}

namespace {

void validate_triangle(const std::array<MultiPoly, 3>& t, const char* which) {
    ScalarMatrix m(3, 3, Scalar());
    for (int i = 0; i < 3; ++i) {
        if (t[i].arity() != 3 || t[i].is_zero() || t[i].degree() != 1 || !t[i].homogeneous_degree_in_first(3))
            throw std::invalid_argument(std::string("triangle_lemma_check: ") + which + ": not a linear form");
        for (int j = 0; j < 3; ++j) {
            ExpVec e(3, 0);
            e[j] = 1;
            m(i, j) = t[i].coeff(e);
        }
    }
    if (det(m).is_zero())
        throw std::invalid_argument(std::string("triangle_lemma_check: ") + which + ": lines are concurrent or dependent");
}

}  // namespace

TriangleLemmaReport triangle_lemma_check(const std::array<MultiPoly, 3>& t, const std::array<MultiPoly, 3>& tbar) {
    validate_triangle(t, "first triangle");
    validate_triangle(tbar, "second triangle");
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (t[i].proportional_to(tbar[j]))
                throw std::invalid_argument("triangle_lemma_check: triangles share the side " +
                                            print_polynomial(t[i].normalized(), y_vars(3)));
        }
    }
    auto vt = triangle_vertices(t);
    auto vbar = triangle_vertices(tbar);
    for (const auto& a : vt) {
        for (const auto& b : vbar) {
            if (a == b)
                throw std::invalid_argument("triangle_lemma_check: triangles share the vertex " + print_point(a));
        }
    }

    TriangleLemmaReport rep;
    std::vector<std::vector<Scalar>> all_rows;
    ScalarMatrix stacked_conditions(9, 10, Scalar());
    const auto mons = monomials(3, 3);
    for (int k = 0; k < 3; ++k) {
        auto basis = nodal_cubics_at(vbar[k]);
        rep.system_dims[k] = static_cast<int>(basis.size());
        for (auto& v : basis) all_rows.push_back(std::move(v));
        for (int i = 0; i < 3; ++i) {
            for (size_t j = 0; j < mons.size(); ++j) {
                MultiPoly mu = MultiPoly::monomial_of(3, mons[j], Scalar::integer(1));
                stacked_conditions(3 * k + i, static_cast<int>(j)) = mu.derivative(i).evaluate(vbar[k]);
            }
        }
    }
    ScalarMatrix span(static_cast<int>(all_rows.size()), 10, Scalar());
    for (size_t i = 0; i < all_rows.size(); ++i)
        for (int j = 0; j < 10; ++j) span(static_cast<int>(i), j) = all_rows[i][j];
    rep.span_dim = rank(span);

    auto inter = kernel_basis(stacked_conditions);
    rep.intersection_dim = static_cast<int>(inter.size());
    if (!inter.empty()) {
        MultiPoly f(3);
        for (size_t j = 0; j < mons.size(); ++j) f.add_term(mons[j], inter[0][j]);
        rep.representative = f;
        MultiPoly product = tbar[0] * tbar[1] * tbar[2];
        rep.representative_is_product = rep.intersection_dim == 1 && f.proportional_to(product);
    }
    return rep;
}

std::vector<std::vector<Scalar>> curve_pair_intersections(const MultiPoly& f, const MultiPoly& g, Rng& rng) {
    if (f.arity() != 3 || g.arity() != 3) throw ShapeError("curve_pair_intersections: expected ternary forms");
    const MultiPoly& line = f.degree() == 1 ? f : g;
    const MultiPoly& other = f.degree() == 1 ? g : f;
    if (line.degree() != 1) throw std::invalid_argument("curve_pair_intersections: need at least one linear factor");

    // parametrize the line by the kernel of its coefficient row
    Scalar zero = Scalar::zero_like(line.leading_term().second);
    ScalarMatrix row(1, 3, zero);
    for (int j = 0; j < 3; ++j) {
        ExpVec e(3, 0);
        e[j] = 1;
        row(0, j) = line.coeff(e);
    }
    auto span = kernel_basis(row);
    if (span.size() != 2) throw std::invalid_argument("curve_pair_intersections: degenerate line");

    if (other.degree() == 1) {
        ScalarMatrix both(2, 3, zero);
        for (int j = 0; j < 3; ++j) {
            ExpVec e(3, 0);
            e[j] = 1;
            both(0, j) = line.coeff(e);
            both(1, j) = other.coeff(e);
        }
        auto kb = kernel_basis(both);
        if (kb.size() != 1) return {};  // identical lines: no isolated intersection
        return {canonicalize_point(kb[0])};
    }

    uint64_t p = other.modulus();
    if (p == 0)
        throw std::invalid_argument("curve_pair_intersections: line-curve intersections need a prime field");

    // restrict to the line: h(s, u) = other(s b0 + u b1)
    std::vector<MultiPoly> images;
    for (int i = 0; i < 3; ++i) {
        MultiPoly img(2, p);
        img.add_term(ExpVec{1, 0}, span[0][i]);
        img.add_term(ExpVec{0, 1}, span[1][i]);
        images.push_back(img);
    }
    MultiPoly h = other.substitute(images);
    int d = other.degree();
    fpu::Poly uni(static_cast<size_t>(d) + 1, 0);
    for (const auto& [e, c] : h.terms()) uni[e[0]] = c.residue();

    std::vector<std::vector<Scalar>> out;
    auto point_at = [&](const Scalar& s, const Scalar& u) {
        std::vector<Scalar> pt(3, Scalar::mod(0, p));
        for (int i = 0; i < 3; ++i) pt[i] = s * span[0][i] + u * span[1][i];
        return canonicalize_point(pt);
    };
    if (fpu::trim(uni).empty()) throw std::invalid_argument("curve_pair_intersections: line is a component of the curve");
    if (uni[d] == 0) out.push_back(point_at(Scalar::mod(1, p), Scalar::mod(0, p)));  // root at infinity
    for (uint64_t r : fpu::roots(uni, p, rng)) out.push_back(point_at(Scalar::mod(r, p), Scalar::mod(1, p)));
    return out;
}

void attach_explicit_points(SingularReport& rep, const MultiPoly& c, const std::vector<std::vector<Scalar>>& points) {
    MultiPoly f = c;
    if (rep.field_prime != 0 && f.modulus() == 0) f = f.reduce_mod(rep.field_prime);
    for (const auto& pt : points) {
        SingularPointInfo info;
        info.point = canonicalize_point(pt);
        info.type = classify_singular_point(f, info.point);
        rep.explicit_points.push_back(std::move(info));
    }
    if (rep.stabilized && rep.delta < static_cast<long>(rep.explicit_points.size()))
        throw std::logic_error("attach_explicit_points: more explicit singular points than the scheme degree");
}

}  // namespace sexticnet
