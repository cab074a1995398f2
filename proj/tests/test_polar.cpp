#include "doctest.h"

#include "sexticnet/polar.hpp"
#include "sexticnet/polytext.hpp"
#include "test_util.hpp"

using namespace sexticnet;
using testutil::random_form;
using testutil::random_invertible;

namespace {

CubicFourfold cubic(const std::string& text) { return CubicFourfold(parse_polynomial(text, x_vars(6))); }

CubicFourfold cubic_t(const std::string& text) { return CubicFourfold(parse_polynomial(text, with_t(x_vars(6)))); }

MultiPoly xform(const std::string& text) { return parse_polynomial(text, x_vars(6)); }

MultiPoly xtform(const std::string& text) { return parse_polynomial(text, with_t(x_vars(6))); }

std::vector<Scalar> pt6(std::initializer_list<long> v) {
    std::vector<Scalar> p;
    for (long x : v) p.push_back(Scalar::integer(x));
    return p;
}

}  // namespace

TEST_SUITE("polar") {
    TEST_CASE("fermat partials are the six squares") {
        auto ps = partials(CubicFourfold::fermat());
        for (int i = 0; i < 6; ++i) {
            MultiPoly expect = MultiPoly::variable(6, i).pow(2).scaled(Scalar::integer(3));
            CHECK(ps[i].form() == expect);
        }
    }

    TEST_CASE("partials of a single cube") {
        auto ps = partials(cubic("x0^3"));
        CHECK(ps[0].form() == xform("3*x0^2"));
        for (int i = 1; i < 6; ++i) CHECK(ps[i].is_zero());
    }

    TEST_CASE("partials of the deformed fermat cubic") {
        auto ps = partials(cubic_t("t*x1*x3*x5 + x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3"));
        auto tv = with_t(x_vars(6));
        CHECK(ps[0].form() == xtform("3*x0^2"));
        CHECK(ps[1].form() == xtform("t*x3*x5 + 3*x1^2"));
        CHECK(ps[2].form() == xtform("3*x2^2"));
        CHECK(ps[3].form() == xtform("t*x1*x5 + 3*x3^2"));
        CHECK(ps[4].form() == xtform("3*x4^2"));
        CHECK(ps[5].form() == xtform("t*x1*x3 + 3*x5^2"));
    }

    TEST_CASE("polar dimensions") {
        // The six squares occupy six distinct quadric monomials, so the 6x21
        // coefficient matrix visibly has six independent rows.
        CHECK(polar_dimension(CubicFourfold::fermat()) == 6);
        CHECK(polar_dimension(cubic("x0^3")) == 1);
        // no x5 anywhere: the last partial vanishes
        CHECK(polar_dimension(cubic("x0^3 + x1^3 + x2^3 + x3^3 + x4^3")) <= 5);
        Rng rng(7);
        auto [d, t0] = polar_dimension_generic(cubic_t("t*x1*x3*x5 + x0^3+x1^3+x2^3+x3^3+x4^3+x5^3"), rng);
        CHECK(d == 6);
        CHECK_FALSE(t0.is_zero());
    }

    TEST_CASE("polar quadrics of the fermat cubic") {
        CubicFourfold f = CubicFourfold::fermat();
        CHECK(polar_quadric(f, pt6({1, 0, 0, 0, 0, 0})).form() == xform("3*x0^2"));
        QuadraticForm q = polar_quadric(f, pt6({1, 1, 1, 1, 1, 1}));
        CHECK(q.form() == xform("3*x0^2+3*x1^2+3*x2^2+3*x3^2+3*x4^2+3*x5^2"));
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                Scalar expect = i == j ? Scalar::integer(3) : Scalar();
                CHECK(q.matrix()(i, j) == MultiPoly::constant(0, expect));
            }
        }
        CHECK_THROWS_AS(polar_quadric(f, pt6({0, 0, 0, 0, 0, 0})), InvalidPoint);
    }

    TEST_CASE("euler identity: sum x_i dF/dx_i = 3F") {
        Rng rng(41);
        for (int trial = 0; trial < 20; ++trial) {
            MultiPoly form = random_form(rng, 6, 3);
            if (form.is_zero()) continue;
            CubicFourfold f{form};
            auto ps = partials(f);
            MultiPoly acc(6);
            for (int i = 0; i < 6; ++i) acc += MultiPoly::variable(6, i) * ps[i].form();
            CHECK(acc == form.scaled(Scalar::integer(3)));
        }
    }

    TEST_CASE("polar quadric is linear in the point") {
        Rng rng(42);
        CubicFourfold f{random_form(rng, 6, 3)};
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Scalar> p, q, combo;
            Scalar a = rng.nonzero_rational(9), b = rng.nonzero_rational(9);
            for (int i = 0; i < 6; ++i) {
                p.push_back(rng.rational(9));
                q.push_back(rng.rational(9));
                combo.push_back(a * p.back() + b * q.back());
            }
            if (is_zero_vector(p) || is_zero_vector(q) || is_zero_vector(combo)) continue;
            MultiPoly lhs = polar_quadric(f, combo).form();
            MultiPoly rhs = polar_quadric(f, p).form().scaled(a) + polar_quadric(f, q).form().scaled(b);
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("polar dimension is invariant under coordinate changes") {
        Rng rng(43);
        for (int trial = 0; trial < 6; ++trial) {
            MultiPoly form = random_form(rng, 6, 3);
            if (form.is_zero()) continue;
            CubicFourfold f{form};
            ScalarMatrix a = random_invertible(rng, 6, 4);
            std::vector<MultiPoly> images;
            for (int i = 0; i < 6; ++i) {
                MultiPoly img(6);
                for (int j = 0; j < 6; ++j) {
                    ExpVec e(6, 0);
                    e[j] = 1;
                    img.add_term(std::move(e), a(i, j));
                }
                images.push_back(img);
            }
            CubicFourfold composed{form.substitute(images)};
            CHECK(polar_dimension(composed) == polar_dimension(f));
        }
    }

    TEST_CASE("matrix and polynomial views agree") {
        Rng rng(44);
        for (int trial = 0; trial < 10; ++trial) {
            MultiPoly q = random_form(rng, 6, 2);
            if (q.is_zero()) continue;
            QuadraticForm quad{q};
            // x^T M x reconstructs q
            MultiPoly acc(6);
            for (int i = 0; i < 6; ++i) {
                for (int j = 0; j < 6; ++j) {
                    const MultiPoly& entry = quad.matrix()(i, j);
                    if (entry.is_zero()) continue;
                    Scalar c = entry.coeff(ExpVec{});
                    acc += (MultiPoly::variable(6, i) * MultiPoly::variable(6, j)).scaled(c);
                }
            }
            CHECK(acc == q);
        }
    }
}
