#pragma once

#include <array>

#include "sexticnet/fproots.hpp"
#include "sexticnet/matrix.hpp"
#include "sexticnet/points.hpp"
#include "sexticnet/polytext.hpp"
#include "sexticnet/rng.hpp"

namespace sexticnet {

enum class LocalType { Node, NonNode, Nonsingular };

struct SingularPointInfo {
    std::vector<Scalar> point;  // canonical representative
    LocalType type = LocalType::Nonsingular;
    int quadric_rank = -1;  // filled by callers that track the ambient quadric
};

// Degree of the Jacobian scheme of a ternary form, read off the Hilbert
// function of R/(partials) on the stabilization window [3(d-2)+1, 3(d-2)+3].
// Equal window values certify the degree; anything else is flagged, never
// silently reported.
struct SingularReport {
    int curve_degree = 0;
    uint64_t field_prime = 0;  // 0 = rational
    bool stabilized = false;
    long delta = -1;  // valid when stabilized; 0 = smooth curve
    std::array<int, 3> window{};
    std::array<long, 3> hilbert{};
    std::vector<SingularPointInfo> explicit_points;

    bool smooth() const { return stabilized && delta == 0; }
};

// field_prime = 0 computes over Q; otherwise reduces rational input mod p (or
// takes mod-p input as is).  Throws on the zero form.
SingularReport jacobian_scheme_degree(const MultiPoly& c, uint64_t field_prime = 0);

// Local type of a curve point: move it to (0:0:1), dehomogenize, inspect the
// quadratic part.  The point must lie on the curve.
LocalType classify_singular_point(const MultiPoly& c, const std::vector<Scalar>& point);

// Rank of the evaluation matrix of degree-d monomials at the points, and
// whether the points impose independent conditions (rank == count).
std::pair<int, bool> nodes_impose_independent_conditions(const std::vector<std::vector<Scalar>>& points, int d);

// Basis (as coefficient vectors in the 10 cubic monomials) of the cubics
// singular at v; always 7-dimensional.
std::vector<std::vector<Scalar>> nodal_cubics_at(const std::vector<Scalar>& v);

struct TriangleLemmaReport {
    std::array<int, 3> system_dims{};
    int span_dim = 0;
    int intersection_dim = 0;
    MultiPoly representative = MultiPoly::zero(3);
    bool representative_is_product = false;
};

// The three linear systems of cubics nodal at the vertices of tbar, their
// span inside the full 10-dimensional cubic space, and their intersection
// (expected: the single point tbar itself).  Triangles must be nondegenerate
// and share no side or vertex.
TriangleLemmaReport triangle_lemma_check(const std::array<MultiPoly, 3>& t, const std::array<MultiPoly, 3>& tbar);

// Vertices of a triangle of lines: pairwise intersection points.
std::array<std::vector<Scalar>, 3> triangle_vertices(const std::array<MultiPoly, 3>& t);

// Intersection points of two distinct plane curves when at least one factor
// is a line.  Over F_p all rational intersection points are found (root
// finding); over Q only the line-line case is supported.
std::vector<std::vector<Scalar>> curve_pair_intersections(const MultiPoly& f, const MultiPoly& g, Rng& rng);

// Classifies the given points on c and stores them in the report; enforces
// the delta >= #points invariant.
void attach_explicit_points(SingularReport& rep, const MultiPoly& c, const std::vector<std::vector<Scalar>>& points);

}  // namespace sexticnet
