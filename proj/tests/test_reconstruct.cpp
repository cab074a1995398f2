#include "doctest.h"

#include "sexticnet/polytext.hpp"
#include "sexticnet/reconstruct.hpp"
#include "test_util.hpp"

using namespace sexticnet;

namespace {

const char* kNetQ0 = "3*x0^2 + 2*x0*x5 + 3*x1^2 + 4*x1*x4 + 16*x2*x3 + 4*x2*x5 + x3*x5 + 6*x1*x5";
const char* kNetQ1 = "2*x0*x1 + 4/3*x0*x4 + 2*x0*x5 + 2*x1*x5 + 3*x2^2 + 3*x3^2 + 2*x3*x4 + 6*x4*x5 + 3*x2*x3";
const char* kNetQ2 = "16/9*x0*x3 + 4/9*x0*x5 + 2*x1*x2 + x1*x3 - 2*x2*x5 + 3*x4^2 + 3*x5^2";

// The closed-form integral of the net above (unit leading scale, no free
// cubic in x3, x4, x5 added).
const char* kNetCubic =
    "x0^3 + x0^2*x5 + 3*x0*x1^2 + 4*x0*x1*x4 + 16*x0*x2*x3 + 4*x0*x2*x5 + x0*x3*x5 + 6*x0*x1*x5"
    " + 3*x1^2*x5 + 9*x1*x2^2 + 9*x1*x3^2 + 6*x1*x3*x4 + 18*x1*x4*x5 + 9*x1*x2*x3"
    " - 9*x2^2*x5 + 27*x2*x4^2 + 27*x2*x5^2";

QuadraticForm quad(const char* text) { return QuadraticForm(parse_polynomial(text, x_vars(6))); }

SlotAssignment example_assignment() {
    return SlotAssignment({{0, quad(kNetQ0)}, {1, quad(kNetQ1)}, {2, quad(kNetQ2)}});
}

// Is target a linear combination of the kernel vectors?
bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& target) {
    const int n = static_cast<int>(target.size());
    const int k = static_cast<int>(basis.size());
    ScalarMatrix b(n, k, Scalar()), baug(n, k + 1, Scalar());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) {
            b(i, j) = basis[j][i];
            baug(i, j) = basis[j][i];
        }
        baug(i, k) = target[i];
    }
    return rank(b) == rank(baug);
}

}  // namespace

TEST_SUITE("reconstruct") {
    TEST_CASE("integrating the example net") {
        Rng rng(61);
        IntegrationResult res = integrate_net(example_assignment(), rng);
        CHECK(res.affine_dim == 11);
        CHECK(res.projective_dim == 10);
        CHECK(res.all_scalars_nonzero);

        // the scalar relations hold on every kernel element
        for (const auto& v : res.kernel) {
            Scalar s0 = v[56], s1 = v[57], s2 = v[58];
            CHECK(s1 == s0 * Scalar::integer(3));
            CHECK(s2 == s1 * Scalar::integer(3));
        }

        // resubstitution: the assigned partials equal s_l Q_l exactly
        auto slots = example_assignment().slots();
        for (const auto& v : res.kernel) {
            MultiPoly f = IntegrationResult::cubic_form(v);
            for (int l = 0; l < 3; ++l) {
                CHECK(f.derivative(slots[l].first) == slots[l].second.form().scaled(v[56 + l]));
            }
        }

        // the closed-form cubic solves the system with scales (1, 3, 9)
        std::vector<Scalar> target;
        MultiPoly paper_f = parse_polynomial(kNetCubic, x_vars(6));
        for (const ExpVec& e : monomials(6, 3)) target.push_back(paper_f.coeff(e));
        target.push_back(Scalar::integer(1));
        target.push_back(Scalar::integer(3));
        target.push_back(Scalar::integer(9));
        CHECK(in_span(res.kernel, target));
    }

    TEST_CASE("rank of the integration matrix is 59 - 11 = 48") {
        // fraction-free rank agrees with the rank-nullity count of the
        // reduced-echelon kernel (two independent elimination routes)
        ScalarMatrix a = integration_matrix(example_assignment());
        CHECK(a.rows() == 63);
        CHECK(a.cols() == 59);
        CHECK(rank(a) == 48);
    }

    TEST_CASE("the free part is exactly the cubics in x3, x4, x5") {
        Rng rng(62);
        IntegrationResult res = integrate_net(example_assignment(), rng);
        // slice s0 = 0 of the kernel: solve with an extra row forcing s0 = 0
        std::vector<std::vector<Scalar>> slice;
        for (const auto& v : res.kernel) {
            if (v[56].is_zero()) slice.push_back(v);
        }
        // the reduced-echelon basis puts the full slice in plain sight: 10 of
        // the 11 basis vectors have s0 = 0
        CHECK(slice.size() == 10);
        const auto mons = monomials(6, 3);
        for (const auto& v : slice) {
            CHECK(v[57].is_zero());
            CHECK(v[58].is_zero());
            for (size_t i = 0; i < mons.size(); ++i) {
                bool xyz_only = mons[i][0] == 0 && mons[i][1] == 0 && mons[i][2] == 0;
                if (!xyz_only) CHECK(v[i].is_zero());
            }
        }
    }

    TEST_CASE("single slot with 3*x0^2") {
        Rng rng(63);
        IntegrationResult res = integrate_net(SlotAssignment({{0, quad("3*x0^2")}}), rng);
        // one dimension ties x0^3 to s, and the 35 cubics in x1..x5 are free
        CHECK(res.affine_dim == 36);
        CHECK(res.all_scalars_nonzero);
    }

    TEST_CASE("mixed-partial obstruction forces s0 = 0") {
        Rng rng(64);
        IntegrationResult res = integrate_net(SlotAssignment({{0, quad("x1^2")}, {1, quad("x2^2")}}), rng);
        for (const auto& v : res.kernel) CHECK(v[56].is_zero());
        CHECK_FALSE(res.all_scalars_nonzero);
    }

    TEST_CASE("scaling the quadrics rescales s and fixes the family") {
        Rng rng(65);
        IntegrationResult plain = integrate_net(example_assignment(), rng);
        SlotAssignment scaled({{0, QuadraticForm(quad(kNetQ0).form().scaled(Scalar::fraction(5, 3)))},
                               {1, quad(kNetQ1)},
                               {2, QuadraticForm(quad(kNetQ2).form().scaled(Scalar::integer(-2)))}});
        IntegrationResult res = integrate_net(scaled, rng);
        CHECK(res.affine_dim == plain.affine_dim);
        // F-projections of the kernels agree as subspaces
        for (const auto& v : plain.kernel) {
            std::vector<Scalar> fpart = IntegrationResult::cubic_part(v);
            std::vector<std::vector<Scalar>> res_fparts;
            for (const auto& w : res.kernel) res_fparts.push_back(IntegrationResult::cubic_part(w));
            CHECK(in_span(res_fparts, fpart));
        }
    }

    TEST_CASE("malformed assignments") {
        CHECK_THROWS_AS(SlotAssignment({{0, quad("x1^2")}, {0, quad("x2^2")}}), std::invalid_argument);
        CHECK_THROWS_AS(SlotAssignment({{7, quad("x1^2")}}), std::invalid_argument);
        CHECK_THROWS_AS(SlotAssignment({}), std::invalid_argument);
    }

    TEST_CASE("fiber report on the example data") {
        Rng rng(66);
        // recover the plane of the example net inside |J_X| for the closed-form F:
        // the net quadrics are the first three partials, so the coordinate plane works.
        CubicFourfold f{parse_polynomial(kNetCubic, x_vars(6))};
        ScalarMatrix rows(3, 6, Scalar());
        rows(0, 0) = rows(1, 1) = rows(2, 2) = Scalar::integer(1);
        PlaneInP5 plane = PlaneInP5::from_parametrization(rows);
        // dF/dx0 = Q0, dF/dx1 = 3 Q1, dF/dx2 = 9 Q2: assignment must match the net
        SlotAssignment matching({{0, quad(kNetQ0)},
                                 {1, QuadraticForm(quad(kNetQ1).form().scaled(Scalar::integer(3)))},
                                 {2, QuadraticForm(quad(kNetQ2).form().scaled(Scalar::integer(9)))}});
        FiberReport rep = fiber_dimension_report(f, plane, matching, rng);
        CHECK(rep.member);
        CHECK(rep.projective_dim_is_10);
        CHECK(rep.integration.projective_dim == 10);
    }

    TEST_CASE("fiber report on the fermat cubic with the coordinate plane") {
        Rng rng(67);
        CubicFourfold f = CubicFourfold::fermat();
        ScalarMatrix rows(3, 6, Scalar());
        rows(0, 0) = rows(1, 1) = rows(2, 2) = Scalar::integer(1);
        PlaneInP5 plane = PlaneInP5::from_parametrization(rows);
        SlotAssignment matching({{0, quad("3*x0^2")}, {1, quad("3*x1^2")}, {2, quad("3*x2^2")}});
        FiberReport rep = fiber_dimension_report(f, plane, matching, rng);
        CHECK(rep.member);
        // dF/dx_i = s_i 3x_i^2 forces every x_i-monomial except x_i^3 to die
        // (i = 0, 1, 2), leaving the three tied scales plus the 10 cubics in
        // x3, x4, x5: affine dimension 13.
        CHECK(rep.integration.affine_dim == 13);
        CHECK_FALSE(rep.projective_dim_is_10);
    }

    TEST_CASE("mismatched assignment quadrics are rejected") {
        Rng rng(68);
        CubicFourfold f = CubicFourfold::fermat();
        ScalarMatrix rows(3, 6, Scalar());
        rows(0, 0) = rows(1, 1) = rows(2, 2) = Scalar::integer(1);
        PlaneInP5 plane = PlaneInP5::from_parametrization(rows);
        SlotAssignment wrong({{0, quad("3*x0^2")}, {1, quad("3*x1^2")}, {2, quad("x2^2 + x0*x1")}});
        CHECK_THROWS_AS(fiber_dimension_report(f, plane, wrong, rng), std::invalid_argument);
    }
}
