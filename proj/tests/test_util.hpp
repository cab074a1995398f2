#pragma once

#include "sexticnet/matrix.hpp"
#include "sexticnet/multipoly.hpp"
#include "sexticnet/rng.hpp"

namespace sexticnet::testutil {

inline MultiPoly random_poly(Rng& rng, int arity, int degree, int terms, long coeff_bound = 9) {
    MultiPoly f(arity);
    for (int k = 0; k < terms; ++k) {
        ExpVec e(arity, 0);
        int left = degree;
        for (int i = 0; i < arity; ++i) {
            int pick = static_cast<int>(rng.below(static_cast<uint64_t>(left + 1)));
            e[i] = static_cast<uint32_t>(pick);
            left -= pick;
        }
        f.add_term(std::move(e), Scalar::integer(rng.nonzero_int(coeff_bound)));
    }
    return f;
}

inline MultiPoly random_nonzero_poly(Rng& rng, int arity, int degree, int terms) {
    for (;;) {
        MultiPoly f = random_poly(rng, arity, degree, terms);
        if (!f.is_zero()) return f;
    }
}

// Random homogeneous form of the given degree.
inline MultiPoly random_form(Rng& rng, int arity, int degree, long coeff_bound = 9) {
    MultiPoly f(arity);
    for (const ExpVec& e : monomials(arity, degree)) {
        long c = rng.int_in(-coeff_bound, coeff_bound);
        if (c != 0) f.add_term(e, Scalar::integer(c));
    }
    return f;
}

inline ScalarMatrix random_matrix(Rng& rng, int rows, int cols, long bound = 9) {
    ScalarMatrix m(rows, cols, Scalar());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Scalar::integer(rng.int_in(-bound, bound));
    return m;
}

inline ScalarMatrix random_invertible(Rng& rng, int n, long bound = 9) {
    for (;;) {
        ScalarMatrix m = random_matrix(rng, n, n, bound);
        if (!det(m).is_zero()) return m;
    }
}

}  // namespace sexticnet::testutil
