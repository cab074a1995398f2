#pragma once

#include <optional>

#include "sexticnet/fproots.hpp"
#include "sexticnet/nets.hpp"
#include "sexticnet/sexticlab.hpp"

namespace sexticnet {

// The pencil F(t) = t x_i x_j x_k + x_0^3 + ... + x_5^3 deforming the Fermat
// cubic along one mixed-monomial direction.  The triple is unordered; it is
// stored sorted together with its sorted complement.
class DeformationFamily {
public:
    DeformationFamily(int i, int j, int k);

    const std::array<int, 3>& triple() const { return triple_; }
    const std::array<int, 3>& complement() const { return complement_; }
    const CubicFourfold& cubic() const { return cubic_; }  // in (x0..x5, t)

    static std::vector<std::array<int, 3>> all_triples();  // the 20 choices

private:
    std::array<int, 3> triple_, complement_;
    CubicFourfold cubic_;
};

// 6x6 symmetric matrix of the general polar quadric of the family, entries
// linear in y0..y5 with coefficients in Q[t].
PolyMatrix family_polar_matrix(const DeformationFamily& fam);

// Its determinant, in (y0..y5, t).
MultiPoly family_discriminant(const DeformationFamily& fam);

// 27 y_a y_b y_c [(27 + t^3/4) y_i y_j y_k - (3/4) t^2 (y_i^3 + y_j^3 + y_k^3)]
// with {a,b,c} the complement of the triple; built directly from that shape
// so tests can compare the determinant route against it.
MultiPoly family_discriminant_closed_form(const DeformationFamily& fam);

struct HesseDegenerations {
    // roots of t^3 - 9 t^2 + 108 (the zeta^0 branch) with multiplicities
    std::vector<std::pair<long, int>> rational_roots;
    uint64_t prime = 0;
    uint64_t zeta = 0;
    // the two unsolved branches t^3 - 9 zeta^m t^2 + 108 over F_p, m = 1, 2
    std::array<fpu::Poly, 2> residual_branches{};
    struct SplitCertificate {
        long root;
        MultiPoly cubic_factor;              // ternary, over Q, at this root
        std::array<MultiPoly, 3> lines;      // u + zeta^m v + zeta^(2m) w over F_p
        bool split = false;                  // exact division by all three succeeded
    };
    std::vector<SplitCertificate> certificates;
};

// Parameter values where the Hesse cubic factor degenerates to three lines:
// solves the rational branch exactly and certifies the three-line splitting
// at each rational root over F_p (p = 1 mod 3).
HesseDegenerations hesse_degenerations(const DeformationFamily& fam, uint64_t p);

// The Hesse cubic factor (27 + t^3/4) u v w - (3/4) t^2 (u^3 + v^3 + w^3)
// specialized at t = t0, as a rational ternary form.
MultiPoly hesse_cubic_factor(const Scalar& t0);

// Restriction plane of the family: for the triple (1,3,5) the explicit plane
//   y0 - y1 - y3 + y5 = y2 - y1 + y3 - 2 y5 = y4 - y1 - 2 y3 - 3 y5 = 0
// with coordinates (y_i, y_j, y_k); other triples use the index-permuted one.
PlaneInP5 family_plane(const DeformationFamily& fam);

// The three lines cut on the plane by the coordinate hyperplanes of the
// complement indices: L1 = u + v - w, L2 = u - v + 2w, L3 = u + 2v + 3w.
std::array<MultiPoly, 3> family_plane_lines(const DeformationFamily& fam);

// Discriminant restricted to the family plane, expanded in powers of t.
struct SexticPencil {
    std::array<MultiPoly, 4> comp;  // D0 + t D1 + t^2 D2 + t^3 D3, ternary

    MultiPoly at(const Scalar& t0) const;
};

SexticPencil restrict_to_plane(const DeformationFamily& fam);

// min { m >= 1 : D_m is not a scalar multiple of D0 }; nullopt when every
// component is a multiple (the pencil is constant through D0).
std::optional<int> tangency_order(const SexticPencil& pencil);

// Rank of the specialized polar quadric: the plane point is embedded into
// P^5 through the family plane and the matrix evaluated at (y, t0).
int quadric_rank_at(const DeformationFamily& fam, const std::vector<Scalar>& plane_point, const Scalar& t0);

// Rank of the net quadric over a point (l0 : l1 : l2) of the net plane.
int quadric_rank_at(const NetOfQuadrics& net, const std::vector<Scalar>& net_point);

// Seeded random plane whose six coordinate restrictions are six lines in
// general position (pairwise independent, 15 distinct intersection points):
// on such a plane the Fermat discriminant section is a 15-nodal sextic.
PlaneInP5 general_position_plane(Rng& rng);

}  // namespace sexticnet
