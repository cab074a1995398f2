#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sexticnet {

// Operation mixed rational and modular scalars, or two different moduli.
struct DomainMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A rational could not be reduced mod p (denominator divisible by p).
struct BadReduction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raw arithmetic in F_p for p < 2^32 (products fit in uint64_t).
namespace fp {

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t pow(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv(uint64_t a, uint64_t p);

}  // namespace fp

// Exact scalar: an arbitrary-precision rational, or an element of a prime
// field F_p with p < 2^32.  Rationals stay in lowest terms with positive
// denominator (GMP canonical form); residues stay in [0, p).  Arithmetic
// between the two kinds, or between different moduli, throws DomainMismatch;
// the only sanctioned crossing is reduce_mod().
class Scalar {
public:
    Scalar() : q_(0), v_(0), p_(0) {}

    static Scalar rational(mpq_class q) {
        Scalar s;
        s.q_ = std::move(q);
        return s;
    }
    static Scalar integer(long n) { return rational(mpq_class(n)); }
    static Scalar fraction(long num, long den);
    static Scalar mod(uint64_t v, uint64_t p) {
        if (p == 0) throw std::invalid_argument("Scalar::mod: zero modulus");
        Scalar s;
        s.v_ = v % p;
        s.p_ = p;
        return s;
    }
    static Scalar zero_like(const Scalar& other) {
        return other.is_rational() ? Scalar() : mod(0, other.p_);
    }
    static Scalar one_like(const Scalar& other) {
        return other.is_rational() ? integer(1) : mod(1, other.p_);
    }

    bool is_rational() const { return p_ == 0; }
    // 0 means rational.
    uint64_t modulus() const { return p_; }

    const mpq_class& rat() const {
        require_rational();
        return q_;
    }
    uint64_t residue() const {
        if (is_rational()) throw DomainMismatch("Scalar: residue() on a rational");
        return v_;
    }

    bool is_zero() const { return is_rational() ? q_ == 0 : v_ == 0; }
    bool is_one() const { return is_rational() ? q_ == 1 : v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Rational -> F_p.  Throws BadReduction when the denominator is 0 mod p.
    Scalar reduce_mod(uint64_t p) const;

    std::string str() const;

private:
    void require_rational() const {
        if (!is_rational()) throw DomainMismatch("Scalar: expected rational, got mod-p");
    }
    void require_same_domain(const Scalar& o) const {
        if (p_ != o.p_) throw DomainMismatch("Scalar: mixed domains (" + domain_name() + " vs " + o.domain_name() + ")");
    }
    std::string domain_name() const;

    mpq_class q_;
    uint64_t v_;
    uint64_t p_;
};

// Deterministic Miller-Rabin, valid for any 64-bit input.
bool is_prime(uint64_t n);

// Order-3 element of F_p*; requires p ≡ 1 (mod 3).
uint64_t cube_root_of_unity(uint64_t p);

}  // namespace sexticnet
