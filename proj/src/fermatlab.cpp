#include "sexticnet/fermatlab.hpp"

#include <algorithm>

namespace sexticnet {

namespace {

CubicFourfold build_family_cubic(const std::array<int, 3>& t) {
    for (int idx : t) {
        if (idx < 0 || idx > 5) throw std::invalid_argument("DeformationFamily: index out of range");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        throw std::invalid_argument("DeformationFamily: indices must be distinct");
    MultiPoly f(7);
    ExpVec mixed(7, 0);
    for (int idx : t) mixed[idx] = 1;
    mixed[6] = 1;  // the deformation parameter
    f.add_term(std::move(mixed), Scalar::integer(1));
    for (int i = 0; i < 6; ++i) {
        ExpVec cube(7, 0);
        cube[i] = 3;
        f.add_term(std::move(cube), Scalar::integer(1));
    }
    return CubicFourfold(std::move(f));
}

}  // namespace

DeformationFamily::DeformationFamily(int i, int j, int k)
    : triple_{i, j, k}, complement_{}, cubic_(build_family_cubic({i, j, k})) {
    std::sort(triple_.begin(), triple_.end());
    int c = 0;
    for (int idx = 0; idx < 6; ++idx) {
        if (idx != triple_[0] && idx != triple_[1] && idx != triple_[2]) complement_[c++] = idx;
    }
}

std::vector<std::array<int, 3>> DeformationFamily::all_triples() {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) out.push_back({i, j, k});
    return out;
}

PolyMatrix family_polar_matrix(const DeformationFamily& fam) { return general_polar_matrix(fam.cubic()); }

MultiPoly family_discriminant(const DeformationFamily& fam) { return det_poly_matrix(family_polar_matrix(fam)); }

MultiPoly family_discriminant_closed_form(const DeformationFamily& fam) {
    const auto& [i, j, k] = fam.triple();
    const auto& [a, b, c] = fam.complement();
    auto y = [](int idx) { return MultiPoly::variable(7, idx); };
    MultiPoly t = MultiPoly::variable(7, 6);
    MultiPoly bracket = (MultiPoly::constant(7, Scalar::integer(27)) + t.pow(3).scaled(Scalar::fraction(1, 4))) *
                            (y(i) * y(j) * y(k)) -
                        t.pow(2).scaled(Scalar::fraction(3, 4)) * (y(i).pow(3) + y(j).pow(3) + y(k).pow(3));
    return (y(a) * y(b) * y(c)).scaled(Scalar::integer(27)) * bracket;
}

MultiPoly hesse_cubic_factor(const Scalar& t0) {
    auto v = [](int idx) { return MultiPoly::variable(3, idx); };
    Scalar t2 = t0 * t0, t3 = t2 * t0;
    Scalar lead = Scalar::integer(27) + t3 * Scalar::fraction(1, 4);
    return (v(0) * v(1) * v(2)).scaled(lead) -
           (v(0).pow(3) + v(1).pow(3) + v(2).pow(3)).scaled(t2 * Scalar::fraction(3, 4));
}

HesseDegenerations hesse_degenerations(const DeformationFamily& fam, uint64_t p) {
    (void)fam;  // the branch equations do not depend on the triple
    if (p % 3 != 1) throw std::invalid_argument("hesse_degenerations: need p = 1 mod 3 for the cube root of unity");
    HesseDegenerations out;
    out.prime = p;
    out.zeta = cube_root_of_unity(p);

    // rational branch: 27 + t^3/4 = (9/4) t^2, cleared to t^3 - 9 t^2 + 108 = 0.
    // A monic integer cubic has its rational roots among the divisors of 108.
    MultiPoly branch(1);
    branch.add_term(ExpVec{3}, Scalar::integer(1));
    branch.add_term(ExpVec{2}, Scalar::integer(-9));
    branch.add_term(ExpVec{0}, Scalar::integer(108));
    for (long cand = 1; cand <= 108; ++cand) {
        if (108 % cand != 0) continue;
        for (long root : {cand, -cand}) {
            std::vector<Scalar> pt{Scalar::integer(root)};
            if (!branch.evaluate(pt).is_zero()) continue;
            MultiPoly linear(1);
            linear.add_term(ExpVec{1}, Scalar::integer(1));
            linear.add_term(ExpVec{0}, Scalar::integer(-root));
            int mult = 0;
            MultiPoly rest = branch;
            for (;;) {
                auto q = rest.divide_exact(linear);
                if (!q) break;
                rest = *q;
                ++mult;
            }
            out.rational_roots.push_back({root, mult});
        }
    }

    // residual branches over F_p: t^3 - 9 zeta^m t^2 + 108
    for (int m = 1; m <= 2; ++m) {
        uint64_t z = m == 1 ? out.zeta : fp::mul(out.zeta, out.zeta, p);
        out.residual_branches[m - 1] = fpu::Poly{108 % p, 0, fp::sub(0, fp::mul(9, z, p), p), 1};
    }

    // three-line splitting at each rational root, certified by exact division
    for (const auto& [root, mult] : out.rational_roots) {
        HesseDegenerations::SplitCertificate cert;
        cert.root = root;
        cert.cubic_factor = hesse_cubic_factor(Scalar::integer(root));
        MultiPoly rest = cert.cubic_factor.reduce_mod(p);
        bool ok = true;
        for (int m = 0; m < 3; ++m) {
            uint64_t zm = fp::pow(out.zeta, static_cast<uint64_t>(m), p);
            uint64_t z2m = fp::mul(zm, zm, p);
            MultiPoly line(3, p);
            line.add_term(ExpVec{1, 0, 0}, Scalar::mod(1, p));
            line.add_term(ExpVec{0, 1, 0}, Scalar::mod(zm, p));
            line.add_term(ExpVec{0, 0, 1}, Scalar::mod(z2m, p));
            cert.lines[m] = line;
            auto q = rest.divide_exact(line);
            if (!q) {
                ok = false;
                break;
            }
            rest = *q;
        }
        cert.split = ok && rest.degree() == 0 && !rest.is_zero();
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

PlaneInP5 family_plane(const DeformationFamily& fam) {
    const auto& [i, j, k] = fam.triple();
    const auto& [a, b, c] = fam.complement();
    // coordinates (u, v, w) = (y_i, y_j, y_k); the complement coordinates are
    // u + v - w, u - v + 2w, u + 2v + 3w
    ScalarMatrix rows(3, 6, Scalar());
    auto set_row = [&](int r, long ca, long cb, long cc) {
        rows(r, a) = Scalar::integer(ca);
        rows(r, b) = Scalar::integer(cb);
        rows(r, c) = Scalar::integer(cc);
    };
    rows(0, i) = Scalar::integer(1);
    set_row(0, 1, 1, 1);
    rows(1, j) = Scalar::integer(1);
    set_row(1, 1, -1, 2);
    rows(2, k) = Scalar::integer(1);
    set_row(2, -1, 2, 3);
    return PlaneInP5::from_parametrization(rows);
}

std::array<MultiPoly, 3> family_plane_lines(const DeformationFamily& fam) {
    PlaneInP5 plane = family_plane(fam);
    const auto& [a, b, c] = fam.complement();
    return {plane.restricted_coordinate(a), plane.restricted_coordinate(b), plane.restricted_coordinate(c)};
}

MultiPoly SexticPencil::at(const Scalar& t0) const {
    MultiPoly out = comp[0];
    Scalar power = t0;
    for (int m = 1; m < 4; ++m) {
        out += comp[m].scaled(power);
        power *= t0;
    }
    return out;
}

SexticPencil restrict_to_plane(const DeformationFamily& fam) {
    MultiPoly disc = family_discriminant(fam);  // (y0..y5, t)
    PlaneInP5 plane = family_plane(fam);
    // images in (u, v, w, t)
    std::vector<MultiPoly> images;
    for (int m = 0; m < 6; ++m) {
        MultiPoly img = plane.restricted_coordinate(m).rename_vars(4, {0, 1, 2});
        images.push_back(img);
    }
    images.push_back(MultiPoly::variable(4, 3));  // t -> t
    MultiPoly restricted = disc.substitute(images);
    SexticPencil pencil{{restricted.coeff_of_last(0), restricted.coeff_of_last(1), restricted.coeff_of_last(2),
                         restricted.coeff_of_last(3)}};
    if (pencil.comp[0].is_zero()) throw std::invalid_argument("restrict_to_plane: pencil has zero base member");
    return pencil;
}

std::optional<int> tangency_order(const SexticPencil& pencil) {
    if (pencil.comp[0].is_zero()) throw std::invalid_argument("tangency_order: zero base member");
    for (int m = 1; m < 4; ++m) {
        if (!pencil.comp[m].is_scalar_multiple_of(pencil.comp[0])) return m;
    }
    return std::nullopt;
}

int quadric_rank_at(const DeformationFamily& fam, const std::vector<Scalar>& plane_point, const Scalar& t0) {
    PlaneInP5 plane = family_plane(fam);
    std::vector<Scalar> y = plane.embed(canonicalize_point(plane_point));
    y.push_back(t0);
    return rank(evaluate_matrix(family_polar_matrix(fam), y));
}

int quadric_rank_at(const NetOfQuadrics& net, const std::vector<Scalar>& net_point) {
    std::vector<Scalar> pt = canonicalize_point(net_point);
    if (net.has_parameter()) throw ShapeError("quadric_rank_at: specialize t first");
    if (pt.size() != 3) throw InvalidPoint("quadric_rank_at: expected a net plane point");
    return rank(evaluate_matrix(net.pencil_matrix(), pt));
}

PlaneInP5 general_position_plane(Rng& rng) {
    for (;;) {
        ScalarMatrix rows(3, 6, Scalar());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j) rows(i, j) = Scalar::integer(rng.int_in(-9, 9));
        if (rank(rows) != 3) continue;
        PlaneInP5 plane = PlaneInP5::from_parametrization(rows);
        std::vector<MultiPoly> lines;
        bool good = true;
        for (int i = 0; i < 6 && good; ++i) {
            MultiPoly l = plane.restricted_coordinate(i);
            good = !l.is_zero() && l.degree() == 1;
            lines.push_back(std::move(l));
        }
        for (size_t a = 0; a < lines.size() && good; ++a)
            for (size_t b = a + 1; b < lines.size() && good; ++b)
                if (lines[a].proportional_to(lines[b])) good = false;
        if (!good) continue;
        Rng probe(0);
        std::vector<std::vector<Scalar>> pts;
        for (size_t a = 0; a < lines.size() && good; ++a) {
            for (size_t b = a + 1; b < lines.size() && good; ++b) {
                auto inter = curve_pair_intersections(lines[a], lines[b], probe);
                if (inter.size() != 1) {
                    good = false;
                    break;
                }
                for (const auto& q : pts)
                    if (q == inter[0]) good = false;  // three lines concurrent
                pts.push_back(inter[0]);
            }
        }
        if (good) return plane;
    }
}

}  // namespace sexticnet
