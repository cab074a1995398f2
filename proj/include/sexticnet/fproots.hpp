#pragma once

#include <optional>
#include <vector>

#include "sexticnet/rng.hpp"
#include "sexticnet/scalar.hpp"

namespace sexticnet {

// Dense univariate polynomials over F_p, constant coefficient first.
namespace fpu {

using Poly = std::vector<uint64_t>;

Poly trim(Poly f);
int degree(const Poly& f);  // -1 for zero
Poly rem(const Poly& a, const Poly& b, uint64_t p);
Poly gcd(Poly a, Poly b, uint64_t p);  // monic

// Square root in F_p (Tonelli-Shanks); nullopt for quadratic non-residues.
std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p);

// All distinct roots of f in F_p, ascending.  Splitting of a fully-split
// factor uses random shifts drawn from the stream (seeded, reproducible).
std::vector<uint64_t> roots(const Poly& f, uint64_t p, Rng& rng);

}  // namespace fpu

}  // namespace sexticnet
