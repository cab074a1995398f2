#include "sexticnet/points.hpp"

#include <cctype>
#include <sstream>

namespace sexticnet {

bool is_zero_vector(const std::vector<Scalar>& p) {
    for (const auto& s : p)
        if (!s.is_zero()) return false;
    return true;
}

std::vector<Scalar> primitive_vector(const std::vector<Scalar>& p) {
    if (is_zero_vector(p)) throw InvalidPoint("primitive_vector: zero vector");
    for (const auto& s : p) {
        if (!s.is_rational()) return p;  // mod-p vectors are left alone
    }
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& s : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), s.rat().get_den().get_mpz_t());
    for (const auto& s : p) {
        mpq_class c = s.rat() * den_lcm;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    std::vector<Scalar> out;
    out.reserve(p.size());
    for (const auto& s : p) out.push_back(Scalar::rational(s.rat() * factor));
    return out;
}

std::vector<Scalar> canonicalize_point(const std::vector<Scalar>& p) {
    if (is_zero_vector(p)) throw InvalidPoint("canonicalize_point: zero vector is not a projective point");
    const Scalar* first_nonzero = nullptr;
    for (const auto& s : p) {
        if (!s.is_zero()) {
            first_nonzero = &s;
            break;
        }
    }
    if (!first_nonzero->is_rational()) {
        Scalar inv = first_nonzero->inverse();
        std::vector<Scalar> out;
        out.reserve(p.size());
        for (const auto& s : p) out.push_back(s * inv);
        return out;
    }
    std::vector<Scalar> out = primitive_vector(p);
    if (first_nonzero->rat() < 0) {
        for (auto& s : out) s = -s;
    }
    return out;
}

std::vector<Scalar> parse_point(const std::string& text) {
    std::vector<Scalar> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::string cleaned;
        for (char ch : part)
            if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
        if (cleaned.empty()) throw InvalidPoint("parse_point: empty coordinate in '" + text + "'");
        try {
            mpq_class q(cleaned);
            q.canonicalize();
            out.push_back(Scalar::rational(q));
        } catch (const std::invalid_argument&) {
            throw InvalidPoint("parse_point: bad coordinate '" + cleaned + "'");
        }
    }
    if (out.empty()) throw InvalidPoint("parse_point: empty point");
    return out;
}

std::vector<std::vector<Scalar>> parse_points(const std::string& text) {
    std::vector<std::vector<Scalar>> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) out.push_back(parse_point(part));
    return out;
}

std::string print_point(const std::vector<Scalar>& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ":";
        out += p[i].str();
    }
    return out + ")";
}

}  // namespace sexticnet
