#include "sexticnet/fproots.hpp"

#include <algorithm>

namespace sexticnet {
namespace fpu {

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

namespace {

Poly monic(Poly f, uint64_t p) {
    f = trim(std::move(f));
    if (f.empty()) return f;
    uint64_t inv = fp::inv(f.back(), p);
    for (auto& c : f) c = fp::mul(c, inv, p);
    return f;
}

// exact quotient a / b (remainder known to vanish)
Poly quot(const Poly& a, const Poly& b, uint64_t p) {
    Poly r = trim(a);
    Poly d = trim(b);
    if (d.empty()) throw std::invalid_argument("fpu::quot: division by zero polynomial");
    Poly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, 0);
    uint64_t lead_inv = fp::inv(d.back(), p);
    while (!r.empty() && r.size() >= d.size()) {
        uint64_t f = fp::mul(r.back(), lead_inv, p);
        size_t off = r.size() - d.size();
        q[off] = f;
        for (size_t i = 0; i < d.size(); ++i) r[off + i] = fp::sub(r[off + i], fp::mul(f, d[i], p), p);
        r = trim(std::move(r));
    }
    return trim(std::move(q));
}

// a * b mod f (f monic)
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = fp::add(prod[i + j], fp::mul(a[i], b[j], p), p);
    }
    return rem(prod, f, p);
}

Poly powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    Poly r{1};
    base = rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

Poly rem(const Poly& a, const Poly& b, uint64_t p) {
    Poly r = trim(a);
    Poly d = trim(b);
    if (d.empty()) throw std::invalid_argument("fpu::rem: division by zero polynomial");
    uint64_t lead_inv = fp::inv(d.back(), p);
    while (r.size() >= d.size()) {
        uint64_t f = fp::mul(r.back(), lead_inv, p);
        size_t off = r.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) r[off + i] = fp::sub(r[off + i], fp::mul(f, d[i], p), p);
        r = trim(std::move(r));
        if (r.empty()) break;
    }
    return r;
}

Poly gcd(Poly a, Poly b, uint64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (fp::pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return fp::pow(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) q >>= 1, ++s;
    uint64_t z = 2;
    while (fp::pow(z, (p - 1) / 2, p) == 1) ++z;
    uint64_t m = s, c = fp::pow(z, q, p), t = fp::pow(a, q, p), r = fp::pow(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = fp::mul(tt, tt, p);
            ++i;
        }
        uint64_t b = c;
        for (uint64_t k = 0; k + i + 1 < m; ++k) b = fp::mul(b, b, p);
        m = i;
        c = fp::mul(b, b, p);
        t = fp::mul(t, c, p);
        r = fp::mul(r, b, p);
    }
    return r;
}

namespace {

// Roots of a squarefree fully-split monic g by random-shift splitting.
void split_roots(const Poly& g, uint64_t p, Rng& rng, std::vector<uint64_t>& out) {
    int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(fp::sub(0, g[0], p));  // monic: X + g0
        return;
    }
    if (d == 2) {
        // X^2 + bX + c
        uint64_t b = g[1], c = g[0];
        uint64_t disc = fp::sub(fp::mul(b, b, p), fp::mul(4 % p, c, p), p);
        auto s = sqrt_mod(disc, p);
        if (!s) return;  // cannot happen for fully split input
        uint64_t inv2 = fp::inv(2, p);
        out.push_back(fp::mul(fp::sub(*s, b, p), inv2, p));
        out.push_back(fp::mul(fp::sub(fp::sub(0, b, p), *s, p), inv2, p));
        return;
    }
    for (;;) {
        uint64_t shift = rng.below(p);
        // gcd((X + shift)^((p-1)/2) - 1, g) is a proper factor with probability ~1/2
        Poly base{shift, 1};
        Poly h = powmod(std::move(base), (p - 1) / 2, g, p);
        if (h.empty()) h = Poly{0};
        h[0] = fp::sub(h[0], 1, p);
        Poly f1 = gcd(g, trim(std::move(h)), p);
        int d1 = degree(f1);
        if (d1 <= 0 || d1 >= d) continue;
        Poly f2 = monic(quot(g, f1, p), p);
        split_roots(f1, p, rng, out);
        split_roots(f2, p, rng, out);
        return;
    }
}

}  // namespace

std::vector<uint64_t> roots(const Poly& f, uint64_t p, Rng& rng) {
    Poly g = monic(f, p);
    if (g.empty()) throw std::invalid_argument("fpu::roots: zero polynomial");
    if (degree(g) == 0) return {};
    // product of the distinct linear factors: gcd(X^p - X, f)
    Poly xp = powmod(Poly{0, 1}, p, g, p);
    if (xp.empty()) xp = Poly{0};
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = fp::sub(xp[1], 1, p);
    Poly lin = gcd(g, trim(std::move(xp)), p);
    std::vector<uint64_t> out;
    split_roots(lin, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fpu
}  // namespace sexticnet
