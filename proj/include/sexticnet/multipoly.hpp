#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sexticnet/scalar.hpp"

namespace sexticnet {

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exponent vector; length = arity of the ambient polynomial ring.
using ExpVec = std::vector<uint32_t>;

inline uint32_t exp_total(const ExpVec& e) {
    uint32_t s = 0;
    for (uint32_t x : e) s += x;
    return s;
}

// Graded-lexicographic term order: total degree first, lexicographic tie-break
// (earlier variable more significant).  map::rbegin() is the leading term.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        uint32_t da = exp_total(a), db = exp_total(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial with exact coefficients.  All stored
// coefficients are nonzero and share one domain (rational, or one F_p);
// the domain tag is sticky from the first nonzero term.
class MultiPoly {
public:
    static constexpr int kNegInfinity = INT_MIN;

    using TermMap = std::map<ExpVec, Scalar, GradedLexLess>;

    // arity-0 zero polynomial; a placeholder for report structs
    MultiPoly() : arity_(0), modulus_(0) {}

    explicit MultiPoly(int arity, uint64_t modulus = 0) : arity_(arity), modulus_(modulus) {
        if (arity < 0) throw ShapeError("MultiPoly: negative arity");
    }

    static MultiPoly zero(int arity, uint64_t modulus = 0) { return MultiPoly(arity, modulus); }
    static MultiPoly constant(int arity, const Scalar& c) {
        MultiPoly f(arity, c.modulus());
        f.add_term(ExpVec(arity, 0), c);
        return f;
    }
    static MultiPoly variable(int arity, int var, uint64_t modulus = 0) {
        return monomial_of(arity, unit_exp(arity, var),
                           modulus == 0 ? Scalar::integer(1) : Scalar::mod(1, modulus));
    }
    static MultiPoly monomial_of(int arity, ExpVec e, const Scalar& c) {
        if (static_cast<int>(e.size()) != arity) throw ShapeError("MultiPoly: exponent arity mismatch");
        MultiPoly f(arity, c.modulus());
        f.add_term(std::move(e), c);
        return f;
    }

    int arity() const { return arity_; }
    uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree() const {
        if (terms_.empty()) return kNegInfinity;
        return static_cast<int>(exp_total(terms_.rbegin()->first));
    }

    Scalar coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        if (it != terms_.end()) return it->second;
        return modulus_ == 0 ? Scalar() : Scalar::mod(0, modulus_);
    }

    // Accumulates c onto the coefficient of e, dropping the term if it
    // cancels to zero.
    void add_term(ExpVec e, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(uint32_t k) const;

    MultiPoly derivative(int var) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Ring homomorphism sending variable i to images[i]; all images must share
    // one arity and domain.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    // Specializes the last variable; result has arity-1.
    MultiPoly substitute_last(const Scalar& value) const;

    // Coefficient of (last variable)^power as a polynomial in the remaining
    // variables; result has arity-1.
    MultiPoly coeff_of_last(uint32_t power) const;

    int degree_in(int var) const;

    // Renames variable i to var_map[i] inside a ring of new_arity variables.
    MultiPoly rename_vars(int new_arity, const std::vector<int>& var_map) const;

    // Degree when every term has the same total degree in the first k
    // variables; nullopt otherwise or for the zero polynomial.
    std::optional<int> homogeneous_degree_in_first(int k) const;

    std::pair<ExpVec, Scalar> leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("MultiPoly: leading term of zero");
        return *terms_.rbegin();
    }

    // Canonical representative of the scalar class: over Q, integer
    // coefficients with content 1 and positive leading coefficient; over F_p,
    // monic leading coefficient.
    MultiPoly normalized() const;

    // f = c * base for some scalar c (c = 0 allowed, so zero passes).
    bool is_scalar_multiple_of(const MultiPoly& base) const;
    // Both nonzero and equal up to a nonzero scalar, or both zero.
    bool proportional_to(const MultiPoly& o) const;

    MultiPoly reduce_mod(uint64_t p) const;

    // Exact quotient, or nullopt when the divisor does not divide exactly
    // (single-divisor graded-lex division).
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    static ExpVec unit_exp(int arity, int var) {
        if (var < 0 || var >= arity) throw ShapeError("MultiPoly: variable index out of range");
        ExpVec e(arity, 0);
        e[var] = 1;
        return e;
    }
    void require_arity(const MultiPoly& o) const {
        if (arity_ != o.arity_) throw ShapeError("MultiPoly: arity mismatch");
    }
    // Merged modulus of two operands; zero polynomials are domain-neutral.
    uint64_t merged_modulus(const MultiPoly& o) const;

    int arity_;
    uint64_t modulus_;
    TermMap terms_;
};

inline MultiPoly operator*(const Scalar& c, const MultiPoly& f) { return f.scaled(c); }

unsigned long binomial(unsigned n, unsigned k);

// All exponent vectors of the given total degree, graded-lex descending
// (leading monomial first).  This fixed enumeration is the shared coordinate
// convention for every coefficient matrix in the library.
std::vector<ExpVec> monomials(int arity, int degree);

}  // namespace sexticnet
