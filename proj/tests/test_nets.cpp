#include "doctest.h"

#include "sexticnet/nets.hpp"
#include "sexticnet/polytext.hpp"
#include "test_util.hpp"

using namespace sexticnet;
using testutil::random_form;
using testutil::random_invertible;
using testutil::random_matrix;

namespace {

ScalarMatrix rows_from(std::initializer_list<std::initializer_list<long>> rows) {
    ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()), Scalar());
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long v : row) m(i, j++) = Scalar::integer(v);
        ++i;
    }
    return m;
}

PlaneInP5 coordinate_plane() {
    return PlaneInP5::from_parametrization(rows_from({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}));
}

PlaneInP5 random_plane(Rng& rng) {
    for (;;) {
        ScalarMatrix m = random_matrix(rng, 3, 6, 7);
        try {
            return PlaneInP5::from_parametrization(m);
        } catch (const ShapeError&) {
        }
    }
}

}  // namespace

TEST_SUITE("nets") {
    TEST_CASE("plane conversion on coordinate planes") {
        PlaneInP5 plane = coordinate_plane();
        // equations y3 = y4 = y5 = 0
        ScalarMatrix eqs = plane.equations();
        REQUIRE(eqs.rows() == 3);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 6; ++j) {
                CHECK(eqs(i, j) == (j == i + 3 ? Scalar::integer(1) : Scalar()));
            }
        }
        // double application reproduces the plane
        PlaneInP5 again = plane_conversion(plane.equations(), false);
        CHECK(again.parametrization() == plane.parametrization());
    }

    TEST_CASE("equations annihilate the parametrization") {
        // the explicit plane of the deformation analysis
        ScalarMatrix eqs = rows_from({{1, -1, 0, -1, 0, 1}, {0, -1, 1, 1, 0, -2}, {0, -1, 0, -2, 1, -3}});
        PlaneInP5 plane = PlaneInP5::from_equations(eqs);
        ScalarMatrix prod = matmul(plane.parametrization(), transpose(plane.equations()));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(prod(i, j).is_zero());
        CHECK(rank(plane.parametrization()) == 3);
    }

    TEST_CASE("rank-2 input is rejected") {
        ScalarMatrix bad = rows_from({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}});
        CHECK_THROWS_AS(PlaneInP5::from_parametrization(bad), ShapeError);
        CHECK_THROWS_AS(plane_conversion(bad, false), ShapeError);
    }

    TEST_CASE("fermat with a coordinate plane: improper intersection") {
        NetOfQuadrics net = net_from_plane(CubicFourfold::fermat(), coordinate_plane());
        for (int k = 0; k < 3; ++k) {
            MultiPoly expect = MultiPoly::variable(6, k).pow(2).scaled(Scalar::integer(3));
            CHECK(net.quadric(k).form() == expect);
        }
        PlaneSextic d = discriminant_sextic(net);
        CHECK(d.improper);
        CHECK(d.poly.is_zero());
    }

    TEST_CASE("fermat with a general plane: product of the six restricted coordinates") {
        Rng rng(51);
        PlaneInP5 plane = random_plane(rng);
        NetOfQuadrics net = net_from_plane(CubicFourfold::fermat(), plane);
        PlaneSextic d = discriminant_sextic(net);
        REQUIRE_FALSE(d.improper);
        CHECK(d.poly.homogeneous_degree_in_first(3) == 6);
        MultiPoly expect = MultiPoly::constant(3, Scalar::integer(729));
        for (int i = 0; i < 6; ++i) expect *= plane.restricted_coordinate(i);
        CHECK(d.poly == expect);
    }

    TEST_CASE("degenerate quadrics raise a net error") {
        // dF/dx2..dx5 all vanish, so the third net quadric is zero
        CubicFourfold f{parse_polynomial("x0^2*x1", x_vars(6))};
        CHECK_THROWS_AS(net_from_plane(f, coordinate_plane()), DegenerateNet);
    }

    TEST_CASE("net-coordinate covariance") {
        Rng rng(52);
        for (int trial = 0; trial < 5; ++trial) {
            PlaneInP5 plane = random_plane(rng);
            NetOfQuadrics net = net_from_plane(CubicFourfold::fermat(), plane);
            ScalarMatrix a = random_invertible(rng, 3, 5);
            MultiPoly disc = discriminant_sextic(net).poly;
            MultiPoly disc_prime = discriminant_sextic(net.recombined(a)).poly;
            std::vector<MultiPoly> images;
            for (int k = 0; k < 3; ++k) {
                MultiPoly img(3);
                for (int j = 0; j < 3; ++j) {
                    ExpVec e(3, 0);
                    e[j] = 1;
                    img.add_term(std::move(e), a(k, j));
                }
                images.push_back(img);
            }
            CHECK(disc_prime == disc.substitute(images));
        }
    }

    TEST_CASE("ambient congruence scales the discriminant by det^2") {
        Rng rng(53);
        MultiPoly form = random_form(rng, 6, 3);
        CubicFourfold f{form};
        PlaneInP5 plane = random_plane(rng);
        NetOfQuadrics net = net_from_plane(f, plane);
        ScalarMatrix p = random_invertible(rng, 6, 3);
        std::vector<MultiPoly> images;
        for (int i = 0; i < 6; ++i) {
            MultiPoly img(6);
            for (int j = 0; j < 6; ++j) {
                ExpVec e(6, 0);
                e[j] = 1;
                img.add_term(std::move(e), p(i, j));
            }
            images.push_back(img);
        }
        // replace each quadric q(x) by q(Px); its matrix becomes P^T M P
        NetOfQuadrics congruent(QuadraticForm(net.quadric(0).form().substitute(images)),
                                QuadraticForm(net.quadric(1).form().substitute(images)),
                                QuadraticForm(net.quadric(2).form().substitute(images)));
        Scalar dp = det(p);
        CHECK(discriminant_sextic(congruent).poly == discriminant_sextic(net).poly.scaled(dp * dp));
    }

    TEST_CASE("restrict-then-det equals det-then-restrict") {
        Rng rng(54);
        for (int trial = 0; trial < 4; ++trial) {
            MultiPoly form = random_form(rng, 6, 3);
            if (form.is_zero()) continue;
            CubicFourfold f{form};
            if (polar_dimension(f) < 6) continue;
            PlaneInP5 plane = random_plane(rng);
            MultiPoly via_net = discriminant_sextic(net_from_plane(f, plane)).poly;
            MultiPoly via_restriction = restrict_discriminant(full_polar_discriminant(f), plane);
            CHECK(via_net == via_restriction);
        }
    }

    TEST_CASE("full fermat polar discriminant is the coordinate-product sextic") {
        MultiPoly full = full_polar_discriminant(CubicFourfold::fermat());
        MultiPoly expect = MultiPoly::constant(6, Scalar::integer(729));
        for (int i = 0; i < 6; ++i) expect *= MultiPoly::variable(6, i);
        CHECK(full == expect);
    }

    TEST_CASE("discriminant of the example net (regression fixture)") {
        auto q = [](const char* s) { return QuadraticForm(parse_polynomial(s, x_vars(6))); };
        NetOfQuadrics net(q("3*x0^2 + 2*x0*x5 + 3*x1^2 + 4*x1*x4 + 16*x2*x3 + 4*x2*x5 + x3*x5 + 6*x1*x5"),
                          q("2*x0*x1 + 4/3*x0*x4 + 2*x0*x5 + 2*x1*x5 + 3*x2^2 + 3*x3^2 + 2*x3*x4 + 6*x4*x5 + 3*x2*x3"),
                          q("16/9*x0*x3 + 4/9*x0*x5 + 2*x1*x2 + x1*x3 - 2*x2*x5 + 3*x4^2 + 3*x5^2"));
        PlaneSextic d = discriminant_sextic(net);
        REQUIRE_FALSE(d.improper);
        CHECK(d.poly.homogeneous_degree_in_first(3) == 6);
        const char* fixture =
            "145152*l0^6 + 2046060*l0^5*l1 - 2783808*l0^5*l2 + 24300*l0^4*l1^2 - 2005803*l0^4*l1*l2"
            " + 1977984*l0^4*l2^2 - 839484*l0^3*l1^3 - 102006*l0^3*l1^2*l2 + 632718*l0^3*l1*l2^2"
            " - 145881*l0^3*l2^3 + 85383*l0^2*l1^4 + 295677*l0^2*l1^3*l2 - 310803*l0^2*l1^2*l2^2"
            " - 51273*l0^2*l1*l2^3 - 64910*l0^2*l2^4 + 68256*l0*l1^5 + 51570*l0*l1^4*l2"
            " - 119805*l0*l1^3*l2^2 + 10506*l0*l1^2*l2^3 + 83351*l0*l1*l2^4 - 6585*l0*l2^5"
            " - 9963*l1^6 - 17370*l1^5*l2 + 23247*l1^4*l2^2 - 12345*l1^3*l2^3 + 556*l1^2*l2^4"
            " + 84*l1*l2^5 - 2112*l2^6";
        CHECK(d.poly.normalized() == parse_polynomial(fixture, l_vars(3)));
        // independent spot check: the sextic at a point matches the plain
        // scalar determinant of the specialized pencil matrix
        Rng rng(56);
        uint64_t p = rng.prime31();
        std::vector<Scalar> pt{Scalar::mod(rng.below(p), p), Scalar::mod(rng.below(p), p), Scalar::mod(rng.below(p), p)};
        ScalarMatrix specialized(6, 6, Scalar::mod(0, p));
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                Scalar acc = Scalar::mod(0, p);
                for (int k = 0; k < 3; ++k) {
                    Scalar entry = net.quadric(k).matrix()(i, j).coeff(ExpVec{}).reduce_mod(p);
                    acc += pt[k] * entry;
                }
                specialized(i, j) = acc;
            }
        }
        CHECK(det(specialized) == d.poly.reduce_mod(p).evaluate(pt));
    }

    TEST_CASE("net span equality ignores the ordering") {
        Rng rng(55);
        PlaneInP5 plane = random_plane(rng);
        NetOfQuadrics net = net_from_plane(CubicFourfold::fermat(), plane);
        NetOfQuadrics reordered(net.quadric(2), net.quadric(0), net.quadric(1));
        CHECK(net.same_span(reordered));
        ScalarMatrix a = random_invertible(rng, 3, 4);
        CHECK(net.same_span(net.recombined(a)));
    }
}
