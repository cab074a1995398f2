#pragma once

#include <set>
#include <string>

#include "sexticnet/fproots.hpp"
#include "sexticnet/sexticlab.hpp"

namespace sexticnet {

struct DegenerateImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plane model of the sextic Del Pezzo surface: three non-collinear base
// points, the 7-dimensional system of cubics through them, and a chosen
// triple of independent members defining the projection to P^2.  All data is
// small-integer rational so one setup reduces consistently mod every prime.
struct DelPezzoSetup {
    uint64_t seed = 0;
    int attempt = 0;
    std::array<std::vector<Scalar>, 3> base_points;
    std::vector<MultiPoly> cubic_basis;      // 7 ternary cubics
    std::array<MultiPoly, 3> projection;     // g1, g2, g3
};

DelPezzoSetup make_delpezzo_setup(uint64_t seed, int attempt = 0);

// Same, but with injected base points (validated: distinct, non-collinear).
DelPezzoSetup delpezzo_setup_from_points(uint64_t seed, const std::array<std::vector<Scalar>, 3>& points);

// Hyperplane sections of interest, as cubics through the base points.
MultiPoly smooth_section(const DelPezzoSetup& setup, Rng& rng);
// The nodal system at the chosen 4th point has affine dimension 4; that
// dimension is returned through *system_dim when given.
MultiPoly one_nodal_section(const DelPezzoSetup& setup, Rng& rng, int* system_dim = nullptr);
MultiPoly triangle_section(const DelPezzoSetup& setup);

// Implicit equation of the image of {h = 0} under (g1 : g2 : g3) over F_p,
// fitted as the one-dimensional kernel of the evaluation matrix of the 28
// sextic monomials on sampled image points, then validated on 200 fresh
// points.  Throws DegenerateImage when the kernel is not one-dimensional.
MultiPoly image_sextic(const DelPezzoSetup& setup, const MultiPoly& h, uint64_t p, Rng& rng);

struct DelPezzoRun {
    uint64_t seed = 0;
    uint64_t prime = 0;
    bool ok = false;
    std::string failure;
    int resamples = 0;
    int nodal_system_dim = 0;
    DelPezzoSetup setup;
    std::array<MultiPoly, 3> sections{MultiPoly::zero(3), MultiPoly::zero(3), MultiPoly::zero(3)};
    std::array<MultiPoly, 3> images{MultiPoly::zero(3), MultiPoly::zero(3), MultiPoly::zero(3)};
    std::array<SingularReport, 3> reports;
    std::array<long, 3> node_counts{-1, -1, -1};  // smooth / 1-nodal / triangle sections
};

// Builds a seeded setup, projects the three section types and counts nodes on
// the images.  Degenerate images trigger a fresh setup, up to 10 times.
DelPezzoRun run_experiment(uint64_t seed, uint64_t p);

}  // namespace sexticnet
