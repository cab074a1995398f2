#include "sexticnet/scalar.hpp"

namespace sexticnet {

namespace fp {

uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("fp::inv: division by zero mod " + std::to_string(p));
    return pow(a, p - 2, p);
}

}  // namespace fp

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw std::invalid_argument("Scalar::fraction: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return rational(q);
}

Scalar Scalar::operator-() const {
    if (is_rational()) return rational(mpq_class(-q_));
    return mod(v_ == 0 ? 0 : p_ - v_, p_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_domain(o);
    if (is_rational()) q_ += o.q_;
    else v_ = fp::add(v_, o.v_, p_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_domain(o);
    if (is_rational()) q_ -= o.q_;
    else v_ = fp::sub(v_, o.v_, p_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_domain(o);
    if (is_rational()) q_ *= o.q_;
    else v_ = fp::mul(v_, o.v_, p_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_domain(o);
    if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
    if (is_rational()) q_ /= o.q_;
    else v_ = fp::mul(v_, fp::inv(o.v_, p_), p_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
    if (is_rational()) return rational(1 / q_);
    return mod(fp::inv(v_, p_), p_);
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_domain(o);
    return is_rational() ? q_ == o.q_ : v_ == o.v_;
}

Scalar Scalar::reduce_mod(uint64_t p) const {
    if (!is_rational()) {
        if (p_ != p) throw DomainMismatch("Scalar::reduce_mod: already mod a different prime");
        return *this;
    }
    mpz_class num = q_.get_num(), den = q_.get_den();
    uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
    uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0) throw BadReduction("Scalar::reduce_mod: denominator vanishes mod " + std::to_string(p));
    return mod(fp::mul(n, fp::inv(d, p), p), p);
}

std::string Scalar::str() const {
    if (is_rational()) return q_.get_str();
    return std::to_string(v_);
}

std::string Scalar::domain_name() const {
    return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

namespace {

uint64_t mulmod_wide(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

uint64_t powmod_wide(uint64_t a, uint64_t e, uint64_t n) {
    uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod_wide(r, a, n);
        a = mulmod_wide(a, a, n);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Deterministic witness set for the full 64-bit range.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_wide(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_wide(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t cube_root_of_unity(uint64_t p) {
    if (p % 3 != 1) throw std::invalid_argument("cube_root_of_unity: need p = 1 mod 3");
    for (uint64_t a = 2;; ++a) {
        uint64_t z = fp::pow(a, (p - 1) / 3, p);
        if (z != 1) return z;  // z^3 = a^(p-1) = 1 and z != 1
    }
}

}  // namespace sexticnet
