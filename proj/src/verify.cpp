#include "sexticnet/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "sexticnet/delpezzo.hpp"
#include "sexticnet/example_net.hpp"
#include "sexticnet/fermatlab.hpp"

namespace sexticnet::verify {

namespace {

struct Checker {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

MultiPoly random_form(Rng& rng, int arity, int degree, long bound = 9) {
    MultiPoly f(arity);
    for (const ExpVec& e : monomials(arity, degree)) {
        long c = rng.int_in(-bound, bound);
        if (c != 0) f.add_term(e, Scalar::integer(c));
    }
    return f;
}

CubicFourfold random_polar_dim6_cubic(Rng& rng) {
    for (;;) {
        MultiPoly f = random_form(rng, 6, 3);
        if (f.is_zero()) continue;
        CubicFourfold c{f};
        if (polar_dimension(c) == 6) return c;
    }
}

ScalarMatrix random_matrix(Rng& rng, int rows, int cols, long bound = 9) {
    ScalarMatrix m(rows, cols, Scalar());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Scalar::integer(rng.int_in(-bound, bound));
    return m;
}

ScalarMatrix random_invertible(Rng& rng, int n, long bound = 9) {
    for (;;) {
        ScalarMatrix m = random_matrix(rng, n, n, bound);
        if (!det(m).is_zero()) return m;
    }
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

MultiPoly linear_image(const ScalarMatrix& a, int row, int arity) {
    MultiPoly img(arity);
    for (int j = 0; j < arity; ++j) {
        ExpVec e(arity, 0);
        e[j] = 1;
        img.add_term(std::move(e), a(row, j));
    }
    return img;
}

// ---- criterion bodies ----------------------------------------------------

void reconstruction_example(Checker& c, uint64_t seed) {
    Rng rng(seed);
    IntegrationResult res = integrate_net(example_net_assignment(), rng);
    c.require(res.affine_dim == 11, "affine dimension " + std::to_string(res.affine_dim) + " != 11");
    c.require(res.projective_dim == 10, "projective dimension != 10");
    Scalar three = Scalar::integer(3);
    for (const auto& v : res.kernel) {
        c.require(v[57] == v[56] * three, "relation s1 = 3 s0 fails");
        c.require(v[58] == v[57] * three, "relation s2 = 3 s1 fails");
    }
    // the s0 = 0 slice is exactly the free cubics in x3, x4, x5
    const auto mons = monomials(6, 3);
    int slice = 0;
    for (const auto& v : res.kernel) {
        if (!v[56].is_zero()) continue;
        ++slice;
        for (size_t i = 0; i < mons.size(); ++i) {
            bool xyz_only = mons[i][0] == 0 && mons[i][1] == 0 && mons[i][2] == 0;
            if (!xyz_only) c.require(v[i].is_zero(), "free part leaks outside C(x3,x4,x5)");
        }
    }
    c.require(slice == 10, "free part dimension " + std::to_string(slice) + " != 10");
    c.note("projective dimension 10, relations s1=3s0, s2=3s1 on all 11 basis elements");
}

void fermat_discriminant(Checker& c, uint64_t seed) {
    CubicFourfold fermat = CubicFourfold::fermat();
    MultiPoly full = full_polar_discriminant(fermat);
    MultiPoly expect = MultiPoly::constant(6, Scalar::integer(729));
    for (int i = 0; i < 6; ++i) expect *= MultiPoly::variable(6, i);
    c.require(full == expect, "full polar discriminant != 729 y0..y5");

    Rng rng(seed ^ 0xFE11ull);
    PlaneInP5 plane = general_position_plane(rng);
    NetOfQuadrics net = net_from_plane(fermat, plane);
    PlaneSextic d = discriminant_sextic(net);
    c.require(!d.improper, "random plane section is improper");
    SingularReport rep = jacobian_scheme_degree(d.poly);
    c.require(rep.stabilized && rep.delta == 15, "plane section degree != 15");
    // the section is the product of the six restricted coordinate forms
    std::vector<MultiPoly> lines;
    for (int i = 0; i < 6; ++i) lines.push_back(plane.restricted_coordinate(i));
    std::vector<std::vector<Scalar>> nodes;
    Rng probe(seed ^ 0x9999ull);
    for (size_t a = 0; a < lines.size(); ++a) {
        for (size_t b = a + 1; b < lines.size(); ++b) {
            auto inter = curve_pair_intersections(lines[a], lines[b], probe);
            if (inter.size() == 1) nodes.push_back(inter[0]);
        }
    }
    c.require(nodes.size() == 15, "expected 15 pairwise intersections");
    attach_explicit_points(rep, d.poly, nodes);
    bool all_nodes = true;
    for (auto& info : rep.explicit_points) {
        info.quadric_rank = quadric_rank_at(net, info.point);
        all_nodes = all_nodes && info.type == LocalType::Node;
    }
    c.require(all_nodes, "an intersection point is not a node");
    c.note("full discriminant exact, seeded section: delta 15, 15 nodal intersections");
}

void family_determinant_identity(Checker& c, uint64_t) {
    DeformationFamily fam(1, 3, 5);
    MultiPoly displayed = parse_polynomial(
        "27*y0*y2*y4*((27 + t^3/4)*y1*y3*y5 - 3/4*t^2*(y1^3 + y3^3 + y5^3))", with_t(y_vars(6)));
    c.require(family_discriminant(fam) == displayed, "(1,3,5) determinant differs from the displayed form");
    int checked = 0;
    for (const auto& t : DeformationFamily::all_triples()) {
        DeformationFamily f(t[0], t[1], t[2]);
        if (family_discriminant(f) == family_discriminant_closed_form(f)) ++checked;
    }
    c.require(checked == 20, "factorization identity failed for some triple");
    c.note("determinant factorization exact for all 20 triples");
}

void hesse_degenerations_check(Checker& c, uint64_t) {
    DeformationFamily fam(1, 3, 5);
    uint64_t p = 2147483629ull;
    HesseDegenerations h = hesse_degenerations(fam, p);
    std::map<long, int> roots(h.rational_roots.begin(), h.rational_roots.end());
    c.require(roots.size() == 2 && roots.count(6) && roots.count(-3), "rational roots differ from {6, -3}");
    c.require(roots.count(6) && roots[6] == 2, "t = 6 is not a double root");
    c.require(roots.count(-3) && roots[-3] == 1, "t = -3 is not simple");
    c.require(h.certificates.size() == 2, "expected two splitting certificates");
    for (const auto& cert : h.certificates) {
        c.require(cert.split, "cubic factor at t = " + std::to_string(cert.root) + " does not split into three lines");
    }
    c.note("roots 6 (double) and -3; three-line splittings certified by exact division mod " + std::to_string(p));
}

void tangency_order_check(Checker& c, uint64_t) {
    DeformationFamily fam(1, 3, 5);
    SexticPencil pencil = restrict_to_plane(fam);
    c.require(pencil.comp[1].is_zero(), "D1 is not identically zero");
    c.require(!pencil.comp[2].is_scalar_multiple_of(pencil.comp[0]), "D2 is proportional to D0");
    auto order = tangency_order(pencil);
    c.require(order.has_value() && *order == 2, "tangency order != 2");
    c.note("D1 = 0 and D2 independent of D0: tangency order exactly 2");
}

void pencil_node_counts(Checker& c, uint64_t seed) {
    DeformationFamily fam(1, 3, 5);
    SexticPencil pencil = restrict_to_plane(fam);
    MultiPoly d1 = pencil.at(Scalar::integer(1));
    SingularReport at1 = jacobian_scheme_degree(d1);
    c.require(at1.stabilized && at1.delta == 12, "delta(D(1)) != 12");
    SingularReport at0 = jacobian_scheme_degree(pencil.comp[0]);
    c.require(at0.stabilized && at0.delta == 15, "delta(D(0)) != 15");

    // explicit singular points of D(1) over a prime where all nine
    // line-cubic intersections are rational
    auto lines = family_plane_lines(fam);
    MultiPoly cubic = hesse_cubic_factor(Scalar::integer(1));
    Rng rng(seed ^ 0xC6ull);
    bool done = false;
    for (int attempt = 0; attempt < 3000 && !done; ++attempt) {
        uint64_t p = rng.prime31();
        std::vector<std::vector<Scalar>> pts;
        for (size_t a = 0; a < 3; ++a) {
            for (size_t b = a + 1; b < 3; ++b) {
                auto inter = curve_pair_intersections(lines[a], lines[b], rng);
                std::vector<Scalar> redu;
                for (const auto& s : inter[0]) redu.push_back(s.reduce_mod(p));
                pts.push_back(canonicalize_point(redu));
            }
        }
        bool full = true;
        for (const auto& l : lines) {
            auto inter = curve_pair_intersections(l.reduce_mod(p), cubic.reduce_mod(p), rng);
            if (inter.size() != 3) {
                full = false;
                break;
            }
            for (auto& q : inter) pts.push_back(q);
        }
        if (!full) continue;
        done = true;
        auto [r, ok] = nodes_impose_independent_conditions(pts, 6);
        c.require(pts.size() == 12, "expected 12 explicit singular points");
        c.require(r == 12 && ok, "the 12 points do not impose independent conditions");
        c.note("delta(D(1)) = 12, delta(D(0)) = 15, 12 points independent (rank 12) mod " + std::to_string(p));
    }
    c.require(done, "no prime with fully split line-cubic intersections found");
}

void triangle_lemma_criterion(Checker& c, uint64_t seed) {
    auto tf = [](const char* s) { return parse_polynomial(s, x_vars(3)); };
    std::array<MultiPoly, 3> t{tf("x0"), tf("x1"), tf("x2")};
    std::array<MultiPoly, 3> tbar{tf("x0+x1+x2"), tf("x0+2*x1+3*x2"), tf("x0+5*x1+7*x2")};
    auto check_one = [&](const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& b) {
        TriangleLemmaReport rep = triangle_lemma_check(a, b);
        bool ok = rep.system_dims == std::array<int, 3>{7, 7, 7} && rep.span_dim == 10 &&
                  rep.intersection_dim == 1 && rep.representative_is_product;
        return ok;
    };
    c.require(check_one(t, tbar), "fixture triangle pair fails");

    Rng rng(seed ^ 0x771ull);
    int done = 0, guard = 0;
    while (done < 5 && guard < 500) {
        ++guard;
        std::array<MultiPoly, 3> ta, tb;
        for (int i = 0; i < 3; ++i) {
            ta[i] = MultiPoly(3);
            tb[i] = MultiPoly(3);
            for (int v = 0; v < 3; ++v) {
                ExpVec e(3, 0);
                e[v] = 1;
                long c1 = rng.int_in(-9, 9), c2 = rng.int_in(-9, 9);
                if (c1) ta[i].add_term(e, Scalar::integer(c1));
                if (c2) tb[i].add_term(e, Scalar::integer(c2));
            }
        }
        try {
            if (check_one(ta, tb)) ++done;
            else c.require(false, "a seeded generic triangle pair fails the lemma");
        } catch (const std::invalid_argument&) {
            continue;  // degenerate draw, try again
        }
    }
    c.require(done == 5, "could not verify 5 generic triangle pairs");
    c.note("fixture and 5 seeded pairs: systems 7-dimensional, span 10, intersection spanned by the product");
}

void quadric_ranks(Checker& c, uint64_t seed) {
    DeformationFamily fam(1, 3, 5);
    auto ls = family_plane_lines(fam);
    std::vector<MultiPoly> lines{ls[0], ls[1], ls[2], MultiPoly::variable(3, 0), MultiPoly::variable(3, 1),
                                 MultiPoly::variable(3, 2)};
    Rng rng(seed ^ 0xAB1ull);
    int nodes_checked = 0;
    bool all4 = true;
    for (size_t a = 0; a < lines.size(); ++a) {
        for (size_t b = a + 1; b < lines.size(); ++b) {
            auto inter = curve_pair_intersections(lines[a], lines[b], rng);
            if (inter.size() != 1) continue;
            ++nodes_checked;
            all4 = all4 && quadric_rank_at(fam, inter[0], Scalar()) == 4;
        }
    }
    c.require(nodes_checked == 15, "expected 15 explicit nodes");
    c.require(all4, "a node has quadric rank != 4");

    auto vanish_count = [&](const std::vector<Scalar>& pt) {
        int count = 0;
        for (const auto& l : lines)
            if (l.evaluate(pt).is_zero()) ++count;
        return count;
    };
    bool got5 = false, got6 = false;
    for (int tries = 0; tries < 2000 && !(got5 && got6); ++tries) {
        std::vector<Scalar> pt{Scalar::integer(rng.int_in(-30, 30)), Scalar::integer(rng.int_in(-30, 30)),
                               Scalar::integer(rng.int_in(-30, 30))};
        if (is_zero_vector(pt)) continue;
        int vanish = vanish_count(pt);
        if (!got5 && vanish == 1) {
            c.require(quadric_rank_at(fam, pt, Scalar()) == 5, "smooth curve point has rank != 5");
            got5 = true;
        } else if (!got6 && vanish == 0) {
            c.require(quadric_rank_at(fam, pt, Scalar()) == 6, "generic point has rank != 6");
            got6 = true;
        }
    }
    c.require(got5 && got6, "failed to sample smooth and generic points");
    c.note("15 nodes of rank 4, seeded smooth point rank 5, seeded generic point rank 6");
}

void generic_smoothness(Checker& c, uint64_t seed) {
    Rng rng(seed ^ 0x95ull);
    int instances = 0, failures_in_a_row = 0;
    while (instances < 10) {
        CubicFourfold f = random_polar_dim6_cubic(rng);
        PlaneInP5 plane = random_plane(rng);
        uint64_t p = rng.prime31();
        bool smooth = false;
        try {
            NetOfQuadrics net = net_from_plane(f, plane);
            PlaneSextic d = discriminant_sextic(net);
            if (!d.improper) {
                SingularReport rep = jacobian_scheme_degree(d.poly, p);
                smooth = rep.stabilized && rep.delta == 0;
            }
        } catch (const DegenerateNet&) {
            smooth = false;
        }
        if (smooth) {
            ++instances;
            failures_in_a_row = 0;
        } else {
            // the claim is generic: re-randomize once, fail on two in a row
            ++failures_in_a_row;
            if (failures_in_a_row >= 2) {
                c.require(false, "two consecutive non-smooth seeded sections");
                return;
            }
        }
    }
    c.note("10 seeded cubic/plane draws all give smooth discriminant sextics mod random primes");
}

void delpezzo_counts(Checker& c, uint64_t seed) {
    std::array<long, 3> expected{9, 10, 15};
    for (uint64_t p : {2147483629ull, 2147483647ull, 2147483587ull}) {
        DelPezzoRun run = run_experiment(seed, p);
        c.require(run.ok, "experiment failed mod " + std::to_string(p) + ": " + run.failure);
        if (run.ok) {
            c.require(run.node_counts == expected,
                      "node counts mod " + std::to_string(p) + " differ from (9, 10, 15)");
        }
    }
    c.note("node counts (9, 10, 15) for smooth / 1-nodal / triangle sections across 3 primes");
}

void property_suites(Checker& c, uint64_t seed) {
    Rng rng(seed ^ 0x11ull);
    // Euler identity
    for (int i = 0; i < 20; ++i) {
        MultiPoly f = random_form(rng, 6, 3);
        if (f.is_zero()) {
            --i;
            continue;
        }
        CubicFourfold cf{f};
        auto ps = partials(cf);
        MultiPoly acc(6);
        for (int v = 0; v < 6; ++v) acc += MultiPoly::variable(6, v) * ps[v].form();
        c.require(acc == f.scaled(Scalar::integer(3)), "euler identity fails");
    }
    // net-coordinate covariance
    for (int i = 0; i < 20; ++i) {
        CubicFourfold f = random_polar_dim6_cubic(rng);
        PlaneInP5 plane = random_plane(rng);
        NetOfQuadrics net = net_from_plane(f, plane);
        ScalarMatrix a = random_invertible(rng, 3, 5);
        MultiPoly lhs = discriminant_sextic(net.recombined(a)).poly;
        std::vector<MultiPoly> images;
        for (int k = 0; k < 3; ++k) images.push_back(linear_image(a, k, 3));
        c.require(lhs == discriminant_sextic(net).poly.substitute(images), "net-coordinate covariance fails");
    }
    // congruence covariance det(P)^2
    for (int i = 0; i < 20; ++i) {
        PolyMatrix m(6, 6, MultiPoly::zero(3));
        for (int r = 0; r < 6; ++r) {
            for (int s = r; s < 6; ++s) {
                MultiPoly e(3);
                for (int v = 0; v < 3; ++v) {
                    long cc = rng.int_in(-4, 4);
                    if (cc) e += MultiPoly::variable(3, v).scaled(Scalar::integer(cc));
                }
                m(r, s) = e;
                m(s, r) = e;
            }
        }
        ScalarMatrix p = random_invertible(rng, 6, 4);
        Scalar dp = det(p);
        c.require(det_poly_matrix(congruence(m, p)) == det_poly_matrix(m).scaled(dp * dp),
                  "congruence covariance fails");
    }
    // restrict-then-det consistency
    for (int i = 0; i < 20; ++i) {
        CubicFourfold f = random_polar_dim6_cubic(rng);
        PlaneInP5 plane = random_plane(rng);
        MultiPoly via_net = discriminant_sextic(net_from_plane(f, plane)).poly;
        c.require(via_net == restrict_discriminant(full_polar_discriminant(f), plane),
                  "restrict-then-det fails");
    }
    // kernel resubstitution
    for (int i = 0; i < 20; ++i) {
        int rows = static_cast<int>(2 + rng.below(5)), cols = static_cast<int>(2 + rng.below(6));
        ScalarMatrix m = random_matrix(rng, rows, cols);
        auto kb = kernel_basis(m);
        c.require(static_cast<int>(kb.size()) == cols - rank(m), "kernel dimension mismatch");
        for (const auto& v : kb) {
            for (const auto& entry : mat_apply(m, v)) c.require(entry.is_zero(), "kernel vector fails resubstitution");
        }
    }
    c.note("euler, net covariance, congruence det^2, restrict-then-det, kernel resubstitution: 20 instances each");
}

struct Criterion {
    const char* name;
    std::function<void(Checker&, uint64_t)> body;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> table{
        {"reconstruction-example", reconstruction_example},
        {"fermat-discriminant", fermat_discriminant},
        {"family-determinant-identity", family_determinant_identity},
        {"hesse-degenerations", hesse_degenerations_check},
        {"tangency-order", tangency_order_check},
        {"pencil-node-counts", pencil_node_counts},
        {"triangle-lemma", triangle_lemma_criterion},
        {"quadric-ranks", quadric_ranks},
        {"generic-smoothness", generic_smoothness},
        {"delpezzo-experiment", delpezzo_counts},
        {"property-suites", property_suites},
    };
    return table;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

std::string criterion_name(int number) { return criteria().at(static_cast<size_t>(number - 1)).name; }

CriterionResult run_criterion(int number, uint64_t seed) {
    const auto& crit = criteria().at(static_cast<size_t>(number - 1));
    CriterionResult res;
    res.number = number;
    res.name = crit.name;
    auto start = std::chrono::steady_clock::now();
    Checker c;
    try {
        crit.body(c, seed);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    res.pass = c.pass;
    res.detail = c.detail.str();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<CriterionResult> run_all(uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= criterion_count(); ++i) out.push_back(run_criterion(i, seed));
    return out;
}

}  // namespace sexticnet::verify
