#include "sexticnet/multipoly.hpp"

#include <algorithm>

namespace sexticnet {

uint64_t MultiPoly::merged_modulus(const MultiPoly& o) const {
    if (is_zero()) return o.modulus_;
    if (o.is_zero()) return modulus_;
    if (modulus_ != o.modulus_)
        throw DomainMismatch("MultiPoly: mixed coefficient domains");
    return modulus_;
}

void MultiPoly::add_term(ExpVec e, const Scalar& c) {
    if (static_cast<int>(e.size()) != arity_) throw ShapeError("MultiPoly: exponent arity mismatch");
    if (c.is_zero()) return;
    if (is_zero()) {
        modulus_ = c.modulus();
    } else if (c.modulus() != modulus_) {
        throw DomainMismatch("MultiPoly: coefficient domain differs from polynomial domain");
    }
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_arity(o);
    modulus_ = merged_modulus(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_arity(o);
    modulus_ = merged_modulus(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_, modulus_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_arity(o);
    MultiPoly r(arity_, merged_modulus(o));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(arity_);
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return MultiPoly(arity_, modulus_);
    MultiPoly r(arity_, modulus_);
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(uint32_t k) const {
    MultiPoly r = constant(arity_, modulus_ == 0 ? Scalar::integer(1) : Scalar::mod(1, modulus_));
    MultiPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= arity_) throw ShapeError("MultiPoly: derivative variable out of range");
    MultiPoly r(arity_, modulus_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        Scalar m = modulus_ == 0 ? Scalar::integer(static_cast<long>(e[var]))
                                 : Scalar::mod(e[var], modulus_);
        r.add_term(std::move(d), c * m);
    }
    return r;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw ShapeError("MultiPoly: evaluation point arity mismatch");
    uint64_t mod = modulus_;
    for (const auto& s : point) {
        if (!is_zero() && s.modulus() != modulus_)
            throw DomainMismatch("MultiPoly: evaluation point domain mismatch");
        mod = s.modulus();
    }
    Scalar acc = mod == 0 ? Scalar() : Scalar::mod(0, mod);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < arity_; ++i) {
            for (uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != arity_) throw ShapeError("MultiPoly: substitute needs one image per variable");
    int m = images.empty() ? 0 : images[0].arity();
    for (const auto& g : images) {
        if (g.arity() != m) throw ShapeError("MultiPoly: images of mixed arity");
    }
    // Memoized powers of each image.
    std::vector<std::vector<MultiPoly>> pows(arity_);
    auto power = [&](int var, uint32_t k) -> const MultiPoly& {
        auto& cache = pows[var];
        if (cache.empty()) {
            cache.push_back(MultiPoly::constant(m, modulus_ == 0 ? Scalar::integer(1) : Scalar::mod(1, modulus_)));
        }
        while (cache.size() <= k) cache.push_back(cache.back() * images[var]);
        return cache[k];
    };
    MultiPoly r(m, modulus_);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(m, c);
        for (int i = 0; i < arity_; ++i) {
            if (e[i]) t = t * power(i, e[i]);
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::substitute_last(const Scalar& value) const {
    if (arity_ == 0) throw ShapeError("MultiPoly: no variable to specialize");
    MultiPoly r(arity_ - 1, modulus_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (uint32_t k = 0; k < e.back(); ++k) t *= value;
        r.add_term(ExpVec(e.begin(), e.end() - 1), t);
    }
    return r;
}

MultiPoly MultiPoly::coeff_of_last(uint32_t power) const {
    if (arity_ == 0) throw ShapeError("MultiPoly: no variable to extract");
    MultiPoly r(arity_ - 1, modulus_);
    for (const auto& [e, c] : terms_) {
        if (e.back() != power) continue;
        r.add_term(ExpVec(e.begin(), e.end() - 1), c);
    }
    return r;
}

int MultiPoly::degree_in(int var) const {
    if (var < 0 || var >= arity_) throw ShapeError("MultiPoly: variable index out of range");
    int d = kNegInfinity;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

MultiPoly MultiPoly::rename_vars(int new_arity, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != arity_) throw ShapeError("MultiPoly: rename map arity mismatch");
    MultiPoly r(new_arity, modulus_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne(new_arity, 0);
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            int j = var_map[i];
            if (j < 0 || j >= new_arity) throw ShapeError("MultiPoly: rename target out of range");
            ne[j] += e[i];
        }
        r.add_term(std::move(ne), c);
    }
    return r;
}

std::optional<int> MultiPoly::homogeneous_degree_in_first(int k) const {
    if (k < 0 || k > arity_) throw ShapeError("MultiPoly: bad homogeneity span");
    if (terms_.empty()) return std::nullopt;
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int i = 0; i < k; ++i) s += static_cast<int>(e[i]);
        if (!d) d = s;
        else if (*d != s) return std::nullopt;
    }
    return d;
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    if (modulus_ != 0) {
        return scaled(terms_.rbegin()->second.inverse());
    }
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
    }
    for (const auto& [e, c] : terms_) {
        mpq_class scaled_c = c.rat() * den_lcm;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_c.get_num().get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (terms_.rbegin()->second.rat() < 0) factor = -factor;
    return scaled(Scalar::rational(factor));
}

bool MultiPoly::is_scalar_multiple_of(const MultiPoly& base) const {
    if (is_zero()) return true;
    if (base.is_zero()) return false;
    const auto& [ef, cf] = *terms_.rbegin();
    const auto& [eb, cb] = *base.terms_.rbegin();
    if (ef != eb) return false;
    return *this == base.scaled(cf / cb);
}

bool MultiPoly::proportional_to(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return is_scalar_multiple_of(o);
}

MultiPoly MultiPoly::reduce_mod(uint64_t p) const {
    MultiPoly r(arity_, p);
    for (const auto& [e, c] : terms_) r.add_term(e, c.reduce_mod(p));
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    require_arity(divisor);
    if (divisor.is_zero()) throw std::invalid_argument("MultiPoly: division by zero polynomial");
    MultiPoly q(arity_, merged_modulus(divisor));
    MultiPoly r = *this;
    const auto& [eg, cg] = *divisor.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms_.rbegin();
        ExpVec diff(arity_);
        for (int i = 0; i < arity_; ++i) {
            if (er[i] < eg[i]) return std::nullopt;  // leading term not divisible => remainder nonzero
            diff[i] = er[i] - eg[i];
        }
        MultiPoly t = MultiPoly::monomial_of(arity_, std::move(diff), cr / cg);
        q += t;
        r -= t * divisor;
    }
    return q;
}

unsigned long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<ExpVec> monomials(int arity, int degree) {
    std::vector<ExpVec> out;
    if (arity == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    ExpVec cur(arity, 0);
    // Descending graded-lex: leading exponent first.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == arity - 1) {
            cur[var] = static_cast<uint32_t>(remaining);
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = static_cast<uint32_t>(e);
            self(self, var + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

}  // namespace sexticnet
