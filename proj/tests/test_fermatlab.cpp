#include "doctest.h"

#include "sexticnet/fermatlab.hpp"
#include "test_util.hpp"

using namespace sexticnet;

namespace {

MultiPoly ytform(const std::string& text) { return parse_polynomial(text, with_t(y_vars(6))); }

std::vector<Scalar> pt3(long a, long b, long c) {
    return {Scalar::integer(a), Scalar::integer(b), Scalar::integer(c)};
}

// the 15 pairwise intersection points of the six lines cut on the family
// plane at t = 0 (the three explicit lines plus the coordinate lines)
std::vector<std::vector<Scalar>> six_line_nodes(const DeformationFamily& fam) {
    auto ls = family_plane_lines(fam);
    std::vector<MultiPoly> lines{ls[0], ls[1], ls[2], MultiPoly::variable(3, 0), MultiPoly::variable(3, 1),
                                 MultiPoly::variable(3, 2)};
    Rng rng(0);
    std::vector<std::vector<Scalar>> pts;
    for (size_t a = 0; a < lines.size(); ++a)
        for (size_t b = a + 1; b < lines.size(); ++b) {
            auto inter = curve_pair_intersections(lines[a], lines[b], rng);
            REQUIRE(inter.size() == 1);
            pts.push_back(inter[0]);
        }
    return pts;
}

}  // namespace

TEST_SUITE("fermatlab") {
    TEST_CASE("family polar matrix of (1,3,5) is the displayed one") {
        DeformationFamily fam(1, 3, 5);
        PolyMatrix m = family_polar_matrix(fam);
        REQUIRE(is_symmetric(m));
        auto entry = [&](const std::string& text) { return ytform(text); };
        for (int i = 0; i < 6; ++i) CHECK(m(i, i) == entry("3*y" + std::to_string(i)));
        CHECK(m(1, 3) == entry("1/2*t*y5"));
        CHECK(m(1, 5) == entry("1/2*t*y3"));
        CHECK(m(3, 5) == entry("1/2*t*y1"));
        CHECK(m(0, 1).is_zero());
        CHECK(m(0, 2).is_zero());
        CHECK(m(2, 4).is_zero());
        CHECK(m(0, 4).is_zero());
    }

    TEST_CASE("t = 0 specialization is the fermat diagonal") {
        DeformationFamily fam(1, 3, 5);
        PolyMatrix m = family_polar_matrix(fam);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                MultiPoly at0 = m(i, j).substitute_last(Scalar());
                if (i == j) {
                    MultiPoly expect = MultiPoly::variable(6, i).scaled(Scalar::integer(3));
                    CHECK(at0 == expect);
                } else {
                    CHECK(at0.is_zero());
                }
            }
        }
    }

    TEST_CASE("(0,2,4) matrix is the index-permuted (1,3,5) matrix") {
        // the transposition pattern swapping 0<->1, 2<->3, 4<->5
        std::vector<int> sigma{1, 0, 3, 2, 5, 4, 6};
        PolyMatrix a = family_polar_matrix(DeformationFamily(0, 2, 4));
        PolyMatrix b = family_polar_matrix(DeformationFamily(1, 3, 5));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) CHECK(a(i, j) == b(sigma[i], sigma[j]).rename_vars(7, sigma));
    }

    TEST_CASE("discriminant of (1,3,5) matches the displayed factorization") {
        DeformationFamily fam(1, 3, 5);
        MultiPoly disc = family_discriminant(fam);
        MultiPoly displayed =
            ytform("27*y0*y2*y4*((27 + t^3/4)*y1*y3*y5 - 3/4*t^2*(y1^3 + y3^3 + y5^3))");
        CHECK(disc == displayed);
        CHECK(disc == family_discriminant_closed_form(fam));
    }

    TEST_CASE("discriminant identity holds for all 20 triples") {
        for (const auto& t : DeformationFamily::all_triples()) {
            DeformationFamily fam(t[0], t[1], t[2]);
            CHECK(family_discriminant(fam) == family_discriminant_closed_form(fam));
        }
    }

    TEST_CASE("t = 0 member of every family is the fermat cubic") {
        for (const auto& t : DeformationFamily::all_triples()) {
            DeformationFamily fam(t[0], t[1], t[2]);
            CHECK(fam.cubic().specialized(Scalar()).form() == CubicFourfold::fermat().form());
        }
    }

    TEST_CASE("pencil components are sextic forms") {
        SexticPencil pencil = restrict_to_plane(DeformationFamily(1, 3, 5));
        for (const auto& d : pencil.comp) {
            if (!d.is_zero()) CHECK(d.homogeneous_degree_in_first(3) == 6);
        }
        CHECK_FALSE(pencil.comp[0].is_zero());
    }

    TEST_CASE("triple is unordered") {
        CHECK(family_discriminant(DeformationFamily(5, 1, 3)) == family_discriminant(DeformationFamily(1, 3, 5)));
        CHECK_THROWS_AS(DeformationFamily(1, 1, 2), std::invalid_argument);
    }

    TEST_CASE("discriminant at t = 0 is the coordinate product times 729") {
        for (const auto& t : std::vector<std::array<int, 3>>{{1, 3, 5}, {0, 1, 2}, {2, 3, 4}}) {
            DeformationFamily fam(t[0], t[1], t[2]);
            MultiPoly at0 = family_discriminant(fam).substitute_last(Scalar());
            MultiPoly expect = MultiPoly::constant(6, Scalar::integer(729));
            for (int i = 0; i < 6; ++i) expect *= MultiPoly::variable(6, i);
            CHECK(at0 == expect);
        }
    }

    TEST_CASE("hesse degenerations: rational roots and three-line splittings") {
        DeformationFamily fam(1, 3, 5);
        uint64_t p = 2147483629ull;  // 1 mod 3
        HesseDegenerations h = hesse_degenerations(fam, p);
        REQUIRE(h.rational_roots.size() == 2);
        // roots of t^3 - 9 t^2 + 108: t = 6 double, t = -3 simple
        std::map<long, int> roots(h.rational_roots.begin(), h.rational_roots.end());
        REQUIRE(roots.count(6));
        REQUIRE(roots.count(-3));
        CHECK(roots[6] == 2);
        CHECK(roots[-3] == 1);
        CHECK(fp::pow(h.zeta, 3, p) == 1);
        CHECK(h.zeta != 1);
        for (const auto& branch : h.residual_branches) {
            CHECK(branch.size() == 4);
            CHECK(branch[3] == 1);
            CHECK(branch[0] == 108);
            CHECK(branch[1] == 0);
        }
        REQUIRE(h.certificates.size() == 2);
        for (const auto& cert : h.certificates) {
            CHECK(cert.split);
            // at both rational roots the cubic factor is -c (u^3+v^3+w^3 - 3uvw)
            MultiPoly hesse_std = parse_polynomial("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", x_vars(3));
            CHECK(cert.cubic_factor.proportional_to(hesse_std));
        }
    }

    TEST_CASE("the hesse factor at t = 1 is smooth") {
        SingularReport rep = jacobian_scheme_degree(hesse_cubic_factor(Scalar::integer(1)));
        CHECK(rep.smooth());
    }

    TEST_CASE("restriction to the explicit plane") {
        DeformationFamily fam(1, 3, 5);
        // the plane comes out with the displayed equations
        PlaneInP5 plane = family_plane(fam);
        ScalarMatrix eqs(3, 6, Scalar());
        auto set_eq = [&](int r, std::initializer_list<long> v) {
            int j = 0;
            for (long c : v) eqs(r, j++) = Scalar::integer(c);
        };
        set_eq(0, {1, -1, 0, -1, 0, 1});
        set_eq(1, {0, -1, 1, 1, 0, -2});
        set_eq(2, {0, -1, 0, -2, 1, -3});
        ScalarMatrix prod = matmul(plane.parametrization(), transpose(eqs));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(prod(i, j).is_zero());

        auto lines = family_plane_lines(fam);
        MultiPoly l1 = parse_polynomial("x0 + x1 - x2", x_vars(3));
        MultiPoly l2 = parse_polynomial("x0 - x1 + 2*x2", x_vars(3));
        MultiPoly l3 = parse_polynomial("x0 + 2*x1 + 3*x2", x_vars(3));
        CHECK(lines[0] == l1);
        CHECK(lines[1] == l2);
        CHECK(lines[2] == l3);

        SexticPencil pencil = restrict_to_plane(fam);
        MultiPoly uvw = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 1) * MultiPoly::variable(3, 2);
        MultiPoly triple = l1 * l2 * l3;
        CHECK(pencil.comp[0] == (triple * uvw).scaled(Scalar::integer(729)));
        CHECK(pencil.comp[1].is_zero());
        MultiPoly cubes = parse_polynomial("x0^3 + x1^3 + x2^3", x_vars(3));
        CHECK(pencil.comp[2] == (triple * cubes).scaled(Scalar::fraction(-81, 4)));
        CHECK(pencil.comp[3] == (triple * uvw).scaled(Scalar::fraction(27, 4)));
    }

    TEST_CASE("specializations of the pencil stay divisible by the triangle") {
        DeformationFamily fam(1, 3, 5);
        SexticPencil pencil = restrict_to_plane(fam);
        auto lines = family_plane_lines(fam);
        for (long t0 : {1L, 2L, 5L}) {
            MultiPoly d = pencil.at(Scalar::integer(t0));
            auto q1 = d.divide_exact(lines[0]);
            REQUIRE(q1.has_value());
            auto q2 = q1->divide_exact(lines[1]);
            REQUIRE(q2.has_value());
            auto q3 = q2->divide_exact(lines[2]);
            REQUIRE(q3.has_value());
            CHECK(q3->degree() == 3);
        }
    }

    TEST_CASE("restriction commutes with specialization") {
        DeformationFamily fam(1, 3, 5);
        SexticPencil pencil = restrict_to_plane(fam);
        PlaneInP5 plane = family_plane(fam);
        MultiPoly disc = family_discriminant(fam);
        for (long t0 : {0L, 1L, 6L}) {
            MultiPoly specialized = disc.substitute_last(Scalar::integer(t0));
            MultiPoly restricted = restrict_discriminant(specialized, plane);
            CHECK(restricted == pencil.at(Scalar::integer(t0)));
        }
    }

    TEST_CASE("tangency orders") {
        DeformationFamily fam(1, 3, 5);
        SexticPencil pencil = restrict_to_plane(fam);
        auto order = tangency_order(pencil);
        REQUIRE(order.has_value());
        CHECK(*order == 2);

        // generic pencil: D1 independent of D0
        SexticPencil generic{{parse_polynomial("x0^6", x_vars(3)), parse_polynomial("x1^6", x_vars(3)),
                              MultiPoly::zero(3), MultiPoly::zero(3)}};
        CHECK(tangency_order(generic) == 1);

        SexticPencil constant{{parse_polynomial("x0^6", x_vars(3)), MultiPoly::zero(3), MultiPoly::zero(3),
                               MultiPoly::zero(3)}};
        CHECK_FALSE(tangency_order(constant).has_value());
        SexticPencil rescaled{{parse_polynomial("x0^6", x_vars(3)), parse_polynomial("2*x0^6", x_vars(3)),
                               parse_polynomial("-x0^6", x_vars(3)), MultiPoly::zero(3)}};
        CHECK_FALSE(tangency_order(rescaled).has_value());
    }

    TEST_CASE("node counts along the pencil") {
        DeformationFamily fam(1, 3, 5);
        SexticPencil pencil = restrict_to_plane(fam);
        SingularReport at1 = jacobian_scheme_degree(pencil.at(Scalar::integer(1)));
        REQUIRE(at1.stabilized);
        CHECK(at1.delta == 12);
        SingularReport at0 = jacobian_scheme_degree(pencil.comp[0]);
        REQUIRE(at0.stabilized);
        CHECK(at0.delta == 15);
        // agreement with a random prime
        Rng rng(81);
        uint64_t p = rng.prime31();
        CHECK(jacobian_scheme_degree(pencil.at(Scalar::integer(1)), p).delta == 12);
        CHECK(jacobian_scheme_degree(pencil.comp[0], p).delta == 15);
    }

    TEST_CASE("explicit singular points of D(1): 12 points imposing independent conditions") {
        DeformationFamily fam(1, 3, 5);
        SexticPencil pencil = restrict_to_plane(fam);
        auto lines = family_plane_lines(fam);
        MultiPoly cubic = hesse_cubic_factor(Scalar::integer(1)).scaled(Scalar::integer(27));
        // sanity: the product of the components is D(1) up to scale
        CHECK(pencil.at(Scalar::integer(1)).proportional_to(lines[0] * lines[1] * lines[2] * cubic));

        // find a prime where the nine line-cubic intersections are all rational
        Rng rng(82);
        for (int attempt = 0;; ++attempt) {
            REQUIRE(attempt < 3000);
            uint64_t p = rng.prime31();
            std::vector<std::vector<Scalar>> pts;
            // triangle vertices are rational; reduce them
            for (size_t a = 0; a < 3; ++a)
                for (size_t b = a + 1; b < 3; ++b) {
                    auto inter = curve_pair_intersections(lines[a], lines[b], rng);
                    REQUIRE(inter.size() == 1);
                    std::vector<Scalar> redu;
                    for (const auto& s : inter[0]) redu.push_back(s.reduce_mod(p));
                    pts.push_back(canonicalize_point(redu));
                }
            bool full = true;
            MultiPoly cubic_p = cubic.reduce_mod(p);
            for (const auto& l : lines) {
                auto inter = curve_pair_intersections(l.reduce_mod(p), cubic_p, rng);
                if (inter.size() != 3) {
                    full = false;
                    break;
                }
                for (auto& q : inter) pts.push_back(q);
            }
            if (!full) continue;
            REQUIRE(pts.size() == 12);
            auto [r, ok] = nodes_impose_independent_conditions(pts, 6);
            CHECK(r == 12);
            CHECK(ok);
            // every explicit point is a node of D(1)
            SingularReport rep = jacobian_scheme_degree(pencil.at(Scalar::integer(1)), p);
            attach_explicit_points(rep, pencil.at(Scalar::integer(1)), pts);
            for (const auto& info : rep.explicit_points) CHECK(info.type == LocalType::Node);
            break;
        }
    }

    TEST_CASE("determinant commutes with entry-wise plane substitution") {
        DeformationFamily fam(1, 3, 5);
        PolyMatrix m = family_polar_matrix(fam);
        PlaneInP5 plane = family_plane(fam);
        std::vector<MultiPoly> images;
        for (int i = 0; i < 6; ++i) images.push_back(plane.restricted_coordinate(i).rename_vars(4, {0, 1, 2}));
        images.push_back(MultiPoly::variable(4, 3));
        PolyMatrix substituted(6, 6, MultiPoly::zero(4));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) substituted(i, j) = m(i, j).substitute(images);
        CHECK(det_poly_matrix(substituted) == family_discriminant(fam).substitute(images));
    }

    TEST_CASE("quadric rank through the net view") {
        // the t = 0 fiber of the family is the fermat cubic; its net over the
        // family plane sees the same ranks
        DeformationFamily fam(1, 3, 5);
        NetOfQuadrics net = net_from_plane(CubicFourfold::fermat(), family_plane(fam));
        auto nodes = six_line_nodes(fam);
        for (const auto& node : nodes) CHECK(quadric_rank_at(net, node) == 4);
        CHECK(quadric_rank_at(net, pt3(1, 1, 2)) == 5);
        CHECK(quadric_rank_at(net, pt3(1, 2, 4)) == 6);
    }

    TEST_CASE("quadric ranks: 4 at the nodes, 5 on one line, 6 off the curve") {
        DeformationFamily fam(1, 3, 5);
        auto nodes = six_line_nodes(fam);
        CHECK(nodes.size() == 15);
        for (const auto& node : nodes) CHECK(quadric_rank_at(fam, node, Scalar()) == 4);
        // (1:1:2) lies on L1 = u+v-w only
        CHECK(quadric_rank_at(fam, pt3(1, 1, 2), Scalar()) == 5);
        // (1:2:4) is off all six lines
        CHECK(quadric_rank_at(fam, pt3(1, 2, 4), Scalar()) == 6);
    }
}
