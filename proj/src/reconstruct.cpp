#include "sexticnet/reconstruct.hpp"

namespace sexticnet {

SlotAssignment::SlotAssignment(std::vector<std::pair<int, QuadraticForm>> slots) : slots_(std::move(slots)) {
    if (slots_.empty() || slots_.size() > 6) throw std::invalid_argument("SlotAssignment: need between 1 and 6 slots");
    for (size_t a = 0; a < slots_.size(); ++a) {
        auto& [idx, q] = slots_[a];
        if (idx < 0 || idx > 5) throw std::invalid_argument("SlotAssignment: slot index out of range");
        if (q.is_zero()) throw std::invalid_argument("SlotAssignment: zero quadric");
        if (q.has_parameter()) throw std::invalid_argument("SlotAssignment: quadrics must be parameter-free");
        for (size_t b = a + 1; b < slots_.size(); ++b) {
            if (slots_[b].first == idx) throw std::invalid_argument("SlotAssignment: repeated slot");
        }
    }
}

MultiPoly IntegrationResult::cubic_form(const std::vector<Scalar>& v) {
    const auto mons = monomials(6, 3);
    MultiPoly f(6);
    for (size_t i = 0; i < mons.size(); ++i) f.add_term(mons[i], v[i]);
    return f;
}

ScalarMatrix integration_matrix(const SlotAssignment& assignment) {
    const auto cubics = monomials(6, 3);    // 56
    const auto quadrics = monomials(6, 2);  // 21
    const int L = assignment.count();

    // coefficient-by-coefficient: (slot l, quadric monomial m) gives the row
    //   (m_i + 1) * c_{m + e_i}  -  s_l * Q_l[m]  =  0
    std::map<ExpVec, int, GradedLexLess> cubic_index;
    for (size_t i = 0; i < cubics.size(); ++i) cubic_index[cubics[i]] = static_cast<int>(i);

    ScalarMatrix a(21 * L, 56 + L, Scalar());
    for (int l = 0; l < L; ++l) {
        const auto& [xi, q] = assignment.slots()[l];
        for (size_t mi = 0; mi < quadrics.size(); ++mi) {
            const ExpVec& m = quadrics[mi];
            int row = l * 21 + static_cast<int>(mi);
            ExpVec mu = m;
            mu[xi] += 1;
            a(row, cubic_index.at(mu)) = Scalar::integer(static_cast<long>(m[xi]) + 1);
            a(row, 56 + l) = -q.form().coeff(m);
        }
    }
    return a;
}

IntegrationResult integrate_net(const SlotAssignment& assignment, Rng& rng) {
    const int L = assignment.count();
    ScalarMatrix a = integration_matrix(assignment);

    IntegrationResult res;
    res.kernel = kernel_basis(a);
    res.affine_dim = static_cast<int>(res.kernel.size());
    res.projective_dim = res.affine_dim - 1;

    // Per-slot reachability of s_l != 0, then one simultaneous witness on a
    // random kernel combination over a large prime.
    bool per_slot = true;
    for (int l = 0; l < L && per_slot; ++l) {
        bool found = false;
        for (const auto& v : res.kernel) found = found || !v[56 + l].is_zero();
        per_slot = found;
    }
    res.all_scalars_nonzero = false;
    if (per_slot && !res.kernel.empty()) {
        for (int attempt = 0; attempt < 5 && !res.all_scalars_nonzero; ++attempt) {
            uint64_t p = rng.prime31();
            try {
                std::vector<uint64_t> s_combo(L, 0);
                for (const auto& v : res.kernel) {
                    uint64_t r = rng.below(p);
                    for (int l = 0; l < L; ++l) {
                        uint64_t comp = v[56 + l].reduce_mod(p).residue();
                        s_combo[l] = fp::add(s_combo[l], fp::mul(r, comp, p), p);
                    }
                }
                bool ok = true;
                for (int l = 0; l < L; ++l) ok = ok && s_combo[l] != 0;
                if (ok) {
                    res.all_scalars_nonzero = true;
                    res.witness_prime = p;
                }
            } catch (const BadReduction&) {
                // denominator hit the prime; try the next one
            }
        }
    }
    return res;
}

FiberReport fiber_dimension_report(const CubicFourfold& f, const PlaneInP5& plane, const SlotAssignment& assignment,
                                   Rng& rng) {
    if (f.has_parameter()) throw ShapeError("fiber_dimension_report: specialize t first");
    NetOfQuadrics net = net_from_plane(f, plane);
    if (assignment.count() != 3) throw std::invalid_argument("fiber_dimension_report: assignment must cover the three net quadrics");
    for (int k = 0; k < 3; ++k) {
        if (!(assignment.slots()[k].second == net.quadric(k)))
            throw std::invalid_argument("fiber_dimension_report: assignment quadrics differ from the net's");
    }
    FiberReport rep;
    rep.integration = integrate_net(assignment, rng);
    rep.projective_dim_is_10 = rep.integration.projective_dim == 10;

    // Membership: F solvable as a combination of the kernel's cubic parts.
    const auto mons = monomials(6, 3);
    const int dim = rep.integration.affine_dim;
    ScalarMatrix b(56, dim, Scalar());
    ScalarMatrix baug(56, dim + 1, Scalar());
    for (int i = 0; i < 56; ++i) {
        for (int j = 0; j < dim; ++j) {
            b(i, j) = rep.integration.kernel[j][i];
            baug(i, j) = b(i, j);
        }
        baug(i, dim) = f.form().coeff(mons[i]);
    }
    rep.member = rank(b) == rank(baug);
    return rep;
}

}  // namespace sexticnet
