#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "sexticnet/delpezzo.hpp"
#include "sexticnet/example_net.hpp"
#include "sexticnet/fermatlab.hpp"
#include "sexticnet/report.hpp"
#include "sexticnet/verify.hpp"

using namespace sexticnet;

namespace {

struct CommonOpts {
    uint64_t seed = 0;
    bool json = false;
    std::string field = "q";
    uint64_t prime = 0;

    uint64_t effective_prime() const {
        if (field == "fp") return prime ? prime : 2147483629ull;
        return 0;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "seed for every randomized choice (echoed in the report)");
    cmd->add_flag("--json", opts.json, "emit the machine-readable report");
    cmd->add_option("--field", opts.field, "coefficient field: q (exact rationals) or fp")
        ->check(CLI::IsMember({"q", "fp"}));
    cmd->add_option("--prime", opts.prime, "prime for --field fp (default 2147483629)");
}

int finish(Report& rep, const CommonOpts& opts) {
    std::cout << (opts.json ? rep.render_json() : rep.render_text());
    return rep.all_pass() ? 0 : 1;
}

// drops an unused trailing t so parameter-free input stays in 6 variables
MultiPoly parse_cubic_input(const std::string& text) {
    MultiPoly f = parse_polynomial(text, with_t(x_vars(6)));
    if (f.degree_in(6) <= 0) {
        MultiPoly g(6);
        for (const auto& [e, c] : f.terms()) g.add_term(ExpVec(e.begin(), e.end() - 1), c);
        return g;
    }
    return f;
}

ScalarMatrix parse_rows(const std::string& text, int rows, int cols, const std::string& what) {
    auto pts = parse_points(text);
    if (static_cast<int>(pts.size()) != rows)
        throw ParseError(what + ": expected " + std::to_string(rows) + " rows", text);
    ScalarMatrix m(rows, cols, Scalar());
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(pts[i].size()) != cols)
            throw ParseError(what + ": expected " + std::to_string(cols) + " entries per row", text);
        for (int j = 0; j < cols; ++j) m(i, j) = pts[i][j];
    }
    return m;
}

std::array<int, 3> parse_triple(const std::string& text) {
    auto pt = parse_point(text);
    if (pt.size() != 3) throw ParseError("triple: expected three indices", text);
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        mpq_class q = pt[i].rat();
        if (q.get_den() != 1 || q < 0 || q > 5) throw ParseError("triple: indices must be integers in 0..5", text);
        out[i] = static_cast<int>(q.get_num().get_si());
    }
    return out;
}

// ---- subcommand bodies -----------------------------------------------------

int cmd_polar(const std::string& cubic_text, const CommonOpts& opts) {
    Report rep("polar", opts.seed);
    rep.echo_input("cubic", cubic_text);
    MultiPoly f = parse_cubic_input(cubic_text);
    CubicFourfold cubic(f);
    auto ps = partials(cubic);
    auto vars = cubic.has_parameter() ? with_t(x_vars(6)) : x_vars(6);
    for (int i = 0; i < 6; ++i)
        rep.results()["partials"].push_back(print_polynomial(ps[i].form(), vars));
    if (cubic.has_parameter()) {
        Rng rng(opts.seed);
        auto [dim, t0] = polar_dimension_generic(cubic, rng);
        rep.results()["polar_dimension_generic"] = dim;
        rep.results()["t_sample"] = t0.str();
        rep.add_check("polar-dimension-6", dim == 6, "generic dimension " + std::to_string(dim));
    } else {
        int dim = polar_dimension(cubic);
        rep.results()["polar_dimension"] = dim;
        rep.add_check("polar-dimension-6", dim == 6, "dimension " + std::to_string(dim));
    }
    return finish(rep, opts);
}

int cmd_discriminant(const std::string& cubic_text, const std::string& plane_text, bool plane_is_eqs,
                     const CommonOpts& opts) {
    Report rep("discriminant", opts.seed);
    rep.echo_input("cubic", cubic_text);
    rep.echo_input(plane_is_eqs ? "plane-equations" : "plane", plane_text);
    CubicFourfold cubic(parse_cubic_input(cubic_text));
    ScalarMatrix rows = parse_rows(plane_text, 3, 6, "plane");
    PlaneInP5 plane = plane_is_eqs ? PlaneInP5::from_equations(rows) : PlaneInP5::from_parametrization(rows);
    NetOfQuadrics net = net_from_plane(cubic, plane);
    PlaneSextic d = discriminant_sextic(net);
    uint64_t p = opts.effective_prime();
    MultiPoly shown = d.poly;
    if (p != 0 && !d.improper) {
        rep.set_prime(p);
        shown = shown.reduce_mod(p);
    }
    rep.results()["improper"] = d.improper;
    if (!d.improper) {
        auto vars = d.has_parameter() ? with_t(l_vars(3)) : l_vars(3);
        rep.results()["sextic"] = print_polynomial(shown, vars);
        rep.results()["degree"] = shown.degree();
        rep.add_check("degree-6", d.poly.homogeneous_degree_in_first(3) == 6);
    } else {
        rep.add_check("improper-intersection-flagged", true, "determinant vanishes identically");
    }
    return finish(rep, opts);
}

int cmd_integrate(const std::string& example, const std::string& slots_text, const CommonOpts& opts) {
    Report rep("integrate", opts.seed);
    SlotAssignment assignment = example_net_assignment();
    bool is_example = slots_text.empty();
    if (!is_example) {
        rep.echo_input("slots", slots_text);
        std::vector<std::pair<int, QuadraticForm>> slots;
        std::istringstream in(slots_text);
        std::string part;
        while (std::getline(in, part, ';')) {
            auto colon = part.find(':');
            if (colon == std::string::npos) throw ParseError("slots: expected <index>:<quadric>", part);
            int idx = std::stoi(part.substr(0, colon));
            slots.emplace_back(idx, QuadraticForm(parse_polynomial(part.substr(colon + 1), x_vars(6))));
        }
        assignment = SlotAssignment(std::move(slots));
    } else {
        if (example != "paper") throw ParseError("integrate: unknown example '" + example + "'", example);
        rep.echo_input("example", example);
    }
    Rng rng(opts.seed);
    IntegrationResult res = integrate_net(assignment, rng);
    rep.results()["affine_dimension"] = res.affine_dim;
    rep.results()["projective_dimension"] = res.projective_dim;
    rep.results()["all_scalars_nonzero"] = res.all_scalars_nonzero;
    if (res.witness_prime) rep.results()["witness_prime"] = res.witness_prime;
    if (is_example) {
        rep.add_check("projective-dimension-10", res.projective_dim == 10,
                      "dimension " + std::to_string(res.projective_dim));
        bool relations = true;
        Scalar three = Scalar::integer(3);
        for (const auto& v : res.kernel) {
            relations = relations && v[57] == v[56] * three && v[58] == v[57] * three;
        }
        rep.add_check("scalar-relations", relations, "s1 = 3 s0 and s2 = 3 s1 on every kernel element");
    } else {
        rep.add_check("kernel-nonempty", res.affine_dim >= 0);
    }
    return finish(rep, opts);
}

int cmd_nodes(const std::string& curve_text, const CommonOpts& opts) {
    Report rep("nodes", opts.seed);
    rep.echo_input("curve", curve_text);
    MultiPoly c = parse_polynomial(curve_text, x_vars(3));
    uint64_t p = opts.effective_prime();
    if (p) rep.set_prime(p);
    SingularReport sr = jacobian_scheme_degree(c, p);
    rep.results()["degree"] = sr.curve_degree;
    rep.results()["stabilized"] = sr.stabilized;
    for (int k = 0; k < 3; ++k) {
        rep.results()["hilbert"][std::to_string(sr.window[k])] = sr.hilbert[k];
    }
    if (sr.stabilized) rep.results()["delta"] = sr.delta;
    rep.add_check("window-stabilized", sr.stabilized);
    return finish(rep, opts);
}

int cmd_indep(const std::string& points_text, int degree, const CommonOpts& opts) {
    Report rep("indep", opts.seed);
    rep.echo_input("points", points_text);
    rep.echo_input("degree", std::to_string(degree));
    auto pts = parse_points(points_text);
    uint64_t p = opts.effective_prime();
    if (p) {
        rep.set_prime(p);
        for (auto& pt : pts) {
            for (auto& s : pt) s = s.reduce_mod(p);
        }
    }
    auto [r, ok] = nodes_impose_independent_conditions(pts, degree);
    rep.results()["rank"] = r;
    rep.results()["independent"] = ok;
    rep.add_check("independent-conditions", ok, "rank " + std::to_string(r) + " of " + std::to_string(pts.size()));
    return finish(rep, opts);
}

int cmd_triangle_lemma(const std::string& first, const std::string& second, const CommonOpts& opts) {
    Report rep("triangle-lemma", opts.seed);
    rep.echo_input("first", first);
    rep.echo_input("second", second);
    auto parse_tri = [](const std::string& text) {
        std::array<MultiPoly, 3> out;
        std::istringstream in(text);
        std::string part;
        int i = 0;
        while (std::getline(in, part, ';')) {
            if (i >= 3) throw ParseError("triangle: expected three lines", text);
            out[i++] = parse_polynomial(part, x_vars(3));
        }
        if (i != 3) throw ParseError("triangle: expected three lines", text);
        return out;
    };
    TriangleLemmaReport tl = triangle_lemma_check(parse_tri(first), parse_tri(second));
    for (int k = 0; k < 3; ++k) rep.results()["system_dims"].push_back(tl.system_dims[k]);
    rep.results()["span_dimension"] = tl.span_dim;
    rep.results()["intersection_dimension"] = tl.intersection_dim;
    rep.results()["representative"] = print_polynomial(tl.representative.normalized(), x_vars(3));
    rep.add_check("systems-7-dimensional",
                  tl.system_dims == std::array<int, 3>{7, 7, 7});
    rep.add_check("span-is-full-cubic-space", tl.span_dim == 10);
    rep.add_check("intersection-is-the-second-triangle", tl.intersection_dim == 1 && tl.representative_is_product);
    return finish(rep, opts);
}

int cmd_fermat_demo(const CommonOpts& opts) {
    Report rep("fermat-demo", opts.seed);
    CubicFourfold fermat = CubicFourfold::fermat();
    auto ps = partials(fermat);
    for (int i = 0; i < 6; ++i) rep.results()["partials"].push_back(print_polynomial(ps[i].form(), x_vars(6)));
    rep.results()["polar_dimension"] = polar_dimension(fermat);
    MultiPoly full = full_polar_discriminant(fermat);
    rep.results()["full_discriminant"] = print_polynomial(full, y_vars(6));
    MultiPoly expect = MultiPoly::constant(6, Scalar::integer(729));
    for (int i = 0; i < 6; ++i) expect *= MultiPoly::variable(6, i);
    rep.add_check("discriminant-is-729-coordinate-product", full == expect);

    Rng rng(opts.seed ^ 0xFE11ull);
    PlaneInP5 plane = general_position_plane(rng);
    NetOfQuadrics net = net_from_plane(fermat, plane);
    PlaneSextic d = discriminant_sextic(net);
    SingularReport sr = jacobian_scheme_degree(d.poly);
    rep.results()["section"] = print_polynomial(d.poly.normalized(), l_vars(3));
    rep.results()["section_delta"] = sr.stabilized ? sr.delta : -1;
    rep.add_check("section-has-15-nodes", sr.stabilized && sr.delta == 15);
    // quadric ranks along the section: 4 at each node, 6 at a generic point
    std::vector<MultiPoly> lines;
    for (int i = 0; i < 6; ++i) lines.push_back(plane.restricted_coordinate(i));
    Rng probe(opts.seed);
    bool all4 = true;
    int nodes = 0;
    for (size_t a = 0; a < lines.size(); ++a) {
        for (size_t b = a + 1; b < lines.size(); ++b) {
            auto inter = curve_pair_intersections(lines[a], lines[b], probe);
            if (inter.size() != 1) continue;
            ++nodes;
            all4 = all4 && quadric_rank_at(net, inter[0]) == 4;
        }
    }
    rep.results()["nodes_found"] = nodes;
    rep.add_check("nodes-have-quadric-rank-4", nodes == 15 && all4);
    return finish(rep, opts);
}

int cmd_hesse(const std::string& triple_text, const CommonOpts& opts) {
    Report rep("hesse", opts.seed);
    rep.echo_input("triple", triple_text);
    auto t = parse_triple(triple_text);
    uint64_t p = opts.prime ? opts.prime : 2147483629ull;
    rep.set_prime(p);
    DeformationFamily fam(t[0], t[1], t[2]);
    HesseDegenerations h = hesse_degenerations(fam, p);
    for (const auto& [root, mult] : h.rational_roots) {
        nlohmann::ordered_json entry;
        entry["root"] = root;
        entry["multiplicity"] = mult;
        rep.results()["rational_roots"].push_back(entry);
    }
    rep.results()["zeta"] = h.zeta;
    for (const auto& branch : h.residual_branches) {
        std::string s = "t^3 + " + std::to_string(branch[2]) + "*t^2 + " + std::to_string(branch[0]);
        rep.results()["residual_branches"].push_back(s);
    }
    bool roots_ok = h.rational_roots.size() == 2;
    std::map<long, int> roots(h.rational_roots.begin(), h.rational_roots.end());
    roots_ok = roots_ok && roots.count(6) && roots[6] == 2 && roots.count(-3) && roots[-3] == 1;
    rep.add_check("rational-roots-6-double-and-minus-3", roots_ok);
    bool splits = h.certificates.size() == 2;
    for (const auto& cert : h.certificates) splits = splits && cert.split;
    rep.add_check("three-line-splitting-certified", splits);
    return finish(rep, opts);
}

int cmd_tangency(const std::string& triple_text, const CommonOpts& opts) {
    Report rep("tangency", opts.seed);
    rep.echo_input("triple", triple_text);
    auto t = parse_triple(triple_text);
    DeformationFamily fam(t[0], t[1], t[2]);
    SexticPencil pencil = restrict_to_plane(fam);
    std::vector<std::string> vars;
    for (int idx : fam.triple()) vars.push_back("y" + std::to_string(idx));
    for (int m = 0; m < 4; ++m)
        rep.results()["pencil"]["D" + std::to_string(m)] = print_polynomial(pencil.comp[m], vars);
    auto order = tangency_order(pencil);
    rep.results()["tangency_order"] = order ? std::to_string(*order) : "infinite";
    rep.add_check("first-order-term-vanishes", pencil.comp[1].is_zero());
    rep.add_check("tangency-order-2", order.has_value() && *order == 2);
    return finish(rep, opts);
}

int cmd_delpezzo_demo(const CommonOpts& opts) {
    Report rep("delpezzo-demo", opts.seed);
    uint64_t p = opts.prime ? opts.prime : 2147483629ull;
    rep.set_prime(p);
    DelPezzoRun run = run_experiment(opts.seed, p);
    for (const auto& e : run.setup.base_points) rep.results()["base_points"].push_back(print_point(e));
    for (const auto& g : run.setup.projection)
        rep.results()["projection"].push_back(print_polynomial(g, x_vars(3)));
    rep.results()["resamples"] = run.resamples;
    rep.results()["nodal_system_dimension"] = run.nodal_system_dim;
    if (run.ok) {
        const char* names[3] = {"smooth", "one_nodal", "triangle"};
        for (int s = 0; s < 3; ++s) {
            rep.results()["sections"][names[s]] = print_polynomial(run.sections[s], x_vars(3));
            rep.results()["node_counts"][names[s]] = run.node_counts[s];
        }
        rep.add_check("counts-9-10-15", run.node_counts == std::array<long, 3>{9, 10, 15});
    } else {
        rep.add_check("experiment-completed", false, run.failure);
    }
    return finish(rep, opts);
}

int cmd_verify_all(const CommonOpts& opts) {
    Report rep("verify-all", opts.seed);
    auto results = verify::run_all(opts.seed);
    for (const auto& r : results) {
        std::ostringstream name;
        name << "criterion-" << r.number << "-" << r.name;
        rep.add_check(name.str(), r.pass, r.detail);
    }
    return finish(rep, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on nets of polar quadrics of cubic fourfolds and their discriminant sextics"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string cubic_text, plane_text, plane_eqs_text, curve_text, points_text, slots_text;
    std::string example = "paper";
    std::string first_tri = "x0;x1;x2";
    std::string second_tri = "x0+x1+x2;x0+2*x1+3*x2;x0+5*x1+7*x2";
    std::string triple_text = "1,3,5";
    int degree = 6;

    auto* polar_cmd = app.add_subcommand("polar", "partial derivatives and the polar dimension of a cubic");
    polar_cmd->add_option("--cubic", cubic_text, "cubic form in x0..x5 (t allowed)")->required();
    add_common(polar_cmd, opts);

    auto* disc_cmd = app.add_subcommand("discriminant", "discriminant sextic of the net cut by a plane");
    disc_cmd->add_option("--cubic", cubic_text, "cubic form in x0..x5")->required();
    disc_cmd->add_option("--plane", plane_text, "parametrization rows r0;r1;r2 (6 rationals each)");
    disc_cmd->add_option("--plane-eqs", plane_eqs_text, "equations e0;e1;e2 (6 rationals each)");
    add_common(disc_cmd, opts);

    auto* integrate_cmd = app.add_subcommand("integrate", "cubics sharing an assigned net of polar quadrics");
    integrate_cmd->add_option("--example", example, "built-in worked example (paper)");
    integrate_cmd->add_option("--slots", slots_text, "assignment <slot>:<quadric>;... in x0..x5");
    add_common(integrate_cmd, opts);

    auto* nodes_cmd = app.add_subcommand("nodes", "Jacobian-scheme degree of a ternary form");
    nodes_cmd->add_option("--curve", curve_text, "ternary form in x0, x1, x2")->required();
    add_common(nodes_cmd, opts);

    auto* indep_cmd = app.add_subcommand("indep", "independence of point conditions on degree-d curves");
    indep_cmd->add_option("--points", points_text, "plane points a,b,c;...")->required();
    indep_cmd->add_option("--degree", degree, "curve degree (default 6)");
    add_common(indep_cmd, opts);

    auto* tri_cmd = app.add_subcommand("triangle-lemma", "nodal-cubic systems at the vertices of a triangle");
    tri_cmd->add_option("--first", first_tri, "first triangle: three lines separated by ';'");
    tri_cmd->add_option("--second", second_tri, "second triangle");
    add_common(tri_cmd, opts);

    auto* fermat_cmd = app.add_subcommand("fermat-demo", "discriminant geometry of the Fermat cubic");
    add_common(fermat_cmd, opts);

    auto* hesse_cmd = app.add_subcommand("hesse", "degenerate members of the restricted Hesse pencil");
    hesse_cmd->add_option("--triple", triple_text, "deformation triple i,j,k (default 1,3,5)");
    add_common(hesse_cmd, opts);

    auto* tangency_cmd = app.add_subcommand("tangency", "order of tangency of the restricted pencil");
    tangency_cmd->add_option("--triple", triple_text, "deformation triple i,j,k (default 1,3,5)");
    add_common(tangency_cmd, opts);

    auto* dp_cmd = app.add_subcommand("delpezzo-demo", "node counts of projected Del Pezzo sections");
    add_common(dp_cmd, opts);

    auto* verify_cmd = app.add_subcommand("verify-all", "run the full acceptance suite");
    add_common(verify_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (polar_cmd->parsed()) code = cmd_polar(cubic_text, opts);
        else if (disc_cmd->parsed()) {
            if (plane_text.empty() && plane_eqs_text.empty())
                throw ParseError("discriminant: need --plane or --plane-eqs", "");
            code = cmd_discriminant(cubic_text, plane_eqs_text.empty() ? plane_text : plane_eqs_text,
                                    !plane_eqs_text.empty(), opts);
        } else if (integrate_cmd->parsed()) code = cmd_integrate(example, slots_text, opts);
        else if (nodes_cmd->parsed()) code = cmd_nodes(curve_text, opts);
        else if (indep_cmd->parsed()) code = cmd_indep(points_text, degree, opts);
        else if (tri_cmd->parsed()) code = cmd_triangle_lemma(first_tri, second_tri, opts);
        else if (fermat_cmd->parsed()) code = cmd_fermat_demo(opts);
        else if (hesse_cmd->parsed()) code = cmd_hesse(triple_text, opts);
        else if (tangency_cmd->parsed()) code = cmd_tangency(triple_text, opts);
        else if (dp_cmd->parsed()) code = cmd_delpezzo_demo(opts);
        else if (verify_cmd->parsed()) code = cmd_verify_all(opts);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what();
        if (!e.token.empty()) std::cerr << " (offending token: '" << e.token << "')";
        std::cerr << "\n";
        return 2;
    } catch (const InvalidPoint& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cerr << "wall: " << secs << "s\n";
    return code;
}
