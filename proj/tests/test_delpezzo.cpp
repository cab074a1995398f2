#include "doctest.h"

#include "sexticnet/delpezzo.hpp"
#include "test_util.hpp"

using namespace sexticnet;

namespace {
constexpr uint64_t kSeed = 0;
constexpr uint64_t kPrimeA = 2147483629ull;
constexpr uint64_t kPrimeB = 2147483647ull;
constexpr uint64_t kPrimeC = 2147483587ull;
}  // namespace

TEST_SUITE("delpezzo") {
    TEST_CASE("cubics through three non-collinear points form a 7-dimensional system") {
        DelPezzoSetup setup = make_delpezzo_setup(kSeed);
        CHECK(setup.cubic_basis.size() == 7);
        for (const auto& b : setup.cubic_basis) {
            for (const auto& e : setup.base_points) CHECK(b.evaluate(e).is_zero());
        }
        for (const auto& g : setup.projection) {
            for (const auto& e : setup.base_points) CHECK(g.evaluate(e).is_zero());
        }
    }

    TEST_CASE("collinear base points are rejected") {
        std::array<std::vector<Scalar>, 3> collinear{
            std::vector<Scalar>{Scalar::integer(1), Scalar::integer(0), Scalar::integer(0)},
            std::vector<Scalar>{Scalar::integer(0), Scalar::integer(1), Scalar::integer(0)},
            std::vector<Scalar>{Scalar::integer(1), Scalar::integer(1), Scalar::integer(0)}};
        CHECK_THROWS_AS(delpezzo_setup_from_points(kSeed, collinear), std::invalid_argument);
        std::array<std::vector<Scalar>, 3> repeated{
            std::vector<Scalar>{Scalar::integer(1), Scalar::integer(0), Scalar::integer(0)},
            std::vector<Scalar>{Scalar::integer(2), Scalar::integer(0), Scalar::integer(0)},
            std::vector<Scalar>{Scalar::integer(0), Scalar::integer(0), Scalar::integer(1)}};
        CHECK_THROWS_AS(delpezzo_setup_from_points(kSeed, repeated), std::invalid_argument);
    }

    TEST_CASE("sections through the base points behave as expected") {
        DelPezzoSetup setup = make_delpezzo_setup(kSeed);
        Rng rng(kSeed ^ 0xA5A5A5A5ull);
        MultiPoly smooth = smooth_section(setup, rng);
        CHECK(jacobian_scheme_degree(smooth).smooth());
        int dim = 0;
        MultiPoly nodal = one_nodal_section(setup, rng, &dim);
        CHECK(dim == 4);
        SingularReport nodal_rep = jacobian_scheme_degree(nodal);
        CHECK(nodal_rep.delta == 1);
        MultiPoly tri = triangle_section(setup);
        for (const auto& e : setup.base_points) CHECK(tri.evaluate(e).is_zero());
        SingularReport tri_rep = jacobian_scheme_degree(tri);
        CHECK(tri_rep.delta == 3);
    }

    TEST_CASE("sections must pass through the base points") {
        DelPezzoSetup setup = make_delpezzo_setup(kSeed);
        Rng rng(7);
        MultiPoly off = parse_polynomial("x0^3 + x1^3 + x2^3", x_vars(3));
        CHECK_THROWS_AS(image_sextic(setup, off, kPrimeA, rng), std::invalid_argument);
    }

    TEST_CASE("a section inside the projection system degenerates the image") {
        // the image of {g1 = 0} lies on the line y0 = 0, so sextics through the
        // samples are far from unique
        DelPezzoSetup setup = make_delpezzo_setup(kSeed);
        Rng rng(9);
        CHECK_THROWS_AS(image_sextic(setup, setup.projection[0], kPrimeA, rng), DegenerateImage);
    }

    TEST_CASE("node counts 9 / 10 / 15, stable across three primes") {
        std::array<long, 3> expected{9, 10, 15};
        for (uint64_t p : {kPrimeA, kPrimeB, kPrimeC}) {
            DelPezzoRun run = run_experiment(kSeed, p);
            REQUIRE(run.ok);
            CHECK(run.nodal_system_dim == 4);
            CHECK(run.node_counts == expected);
            for (const auto& rep : run.reports) CHECK(rep.stabilized);
        }
    }
}
