#include "sexticnet/matrix.hpp"

#include <bit>

namespace sexticnet {

uint64_t matrix_modulus(const ScalarMatrix& m) {
    uint64_t mod = 0;
    bool seen = false;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            uint64_t p = m(i, j).modulus();
            if (!seen) {
                mod = p;
                seen = true;
            } else if (p != mod) {
                throw DomainMismatch("Matrix: entries from mixed domains");
            }
        }
    }
    return mod;
}

namespace {

int rank_bareiss_rational(const ScalarMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class den_lcm = 1;
        for (int j = 0; j < cols; ++j)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), m(i, j).rat().get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j) {
            mpq_class cleared = m(i, j).rat() * den_lcm;
            a[i][j] = cleared.get_num();
        }
    }
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

int rank_gauss_fp(const ScalarMatrix& m, uint64_t p) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<uint64_t> a(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i) * cols + j] = m(i, j).residue();
    auto at = [&](int i, int j) -> uint64_t& { return a[static_cast<size_t>(i) * cols + j]; };
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (at(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(at(r, j), at(piv, j));
        uint64_t inv = fp::inv(at(r, c), p);
        for (int i = r + 1; i < rows; ++i) {
            if (at(i, c) == 0) continue;
            uint64_t f = fp::mul(at(i, c), inv, p);
            for (int j = c; j < cols; ++j) at(i, j) = fp::sub(at(i, j), fp::mul(f, at(r, j), p), p);
        }
        ++r;
    }
    return r;
}

}  // namespace

int rank(const ScalarMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    uint64_t p = matrix_modulus(m);
    return p == 0 ? rank_bareiss_rational(m) : rank_gauss_fp(m, p);
}

ScalarMatrix rref(const ScalarMatrix& m, std::vector<int>* pivots) {
    ScalarMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        Scalar inv = a(r, c).inverse();
        for (int j = c; j < cols; ++j) a(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar f = a(i, c);
            for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) {
    uint64_t p = m.rows() > 0 && m.cols() > 0 ? matrix_modulus(m) : 0;
    Scalar one = p == 0 ? Scalar::integer(1) : Scalar::mod(1, p);
    Scalar zero = p == 0 ? Scalar() : Scalar::mod(0, p);
    std::vector<int> pivots;
    ScalarMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.cols(), zero);
        v[f] = one;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar det(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("det: matrix not square");
    uint64_t p = matrix_modulus(m);
    Scalar result = p == 0 ? Scalar::integer(1) : Scalar::mod(1, p);
    ScalarMatrix a = m;
    const int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i) {
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return p == 0 ? Scalar() : Scalar::mod(0, p);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
            result = -result;
        }
        result *= a(c, c);
        Scalar inv = a(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar f = a(i, c) * inv;
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return result;
}

ScalarMatrix transpose(const ScalarMatrix& m) {
    ScalarMatrix t(m.cols(), m.rows(), Scalar());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
    ScalarMatrix c(a.rows(), b.cols(), Scalar());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            Scalar acc = a.cols() > 0 ? a(i, 0) * b(0, j) : Scalar();
            for (int k = 1; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    }
    return c;
}

std::vector<Scalar> mat_apply(const ScalarMatrix& m, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw ShapeError("apply: dimension mismatch");
    std::vector<Scalar> out;
    out.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Scalar acc = m.cols() > 0 ? m(i, 0) * v[0] : Scalar();
        for (int j = 1; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out.push_back(acc);
    }
    return out;
}

bool is_symmetric(const PolyMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

MultiPoly det_poly_matrix(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("det_poly_matrix: matrix not square");
    const int n = m.rows();
    if (n == 0) throw ShapeError("det_poly_matrix: empty matrix");
    if (n > 16) throw ShapeError("det_poly_matrix: matrix too large for subset expansion");
    const int arity = m(0, 0).arity();
    std::vector<MultiPoly> minor(1u << n, MultiPoly::zero(arity));
    minor[0] = MultiPoly::constant(arity, Scalar::integer(1));
    for (uint32_t s = 1; s < (1u << n); ++s) {
        int r = std::popcount(s) - 1;  // expand along the last row of the top block
        MultiPoly acc = MultiPoly::zero(arity);
        int idx = 0;
        for (int j = 0; j < n; ++j) {
            if (!(s >> j & 1)) continue;
            if (!m(r, j).is_zero()) {
                MultiPoly contrib = m(r, j) * minor[s & ~(1u << j)];
                if ((r + idx) % 2 == 0) acc += contrib;
                else acc -= contrib;
            }
            ++idx;
        }
        minor[s] = std::move(acc);
    }
    return minor[(1u << n) - 1];
}

PolyMatrix congruence(const PolyMatrix& m, const ScalarMatrix& p) {
    if (m.rows() != m.cols() || p.rows() != m.rows() || p.cols() != m.cols())
        throw ShapeError("congruence: dimension mismatch");
    const int n = m.rows();
    const int arity = n > 0 ? m(0, 0).arity() : 0;
    PolyMatrix out(n, n, MultiPoly::zero(arity));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            MultiPoly acc = MultiPoly::zero(arity);
            for (int k = 0; k < n; ++k) {
                if (p(k, i).is_zero()) continue;
                for (int l = 0; l < n; ++l) {
                    if (p(l, j).is_zero() || m(k, l).is_zero()) continue;
                    acc += m(k, l).scaled(p(k, i) * p(l, j));
                }
            }
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

PolyMatrix poly_matrix_mod(const PolyMatrix& m, uint64_t p) {
    const int arity = m.rows() > 0 ? m(0, 0).arity() : 0;
    PolyMatrix out(m.rows(), m.cols(), MultiPoly::zero(arity, p));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).reduce_mod(p);
    return out;
}

ScalarMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Scalar>& point) {
    ScalarMatrix out(m.rows(), m.cols(), Scalar());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
    return out;
}

}  // namespace sexticnet
