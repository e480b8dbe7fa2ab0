#include "qcov/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcov {

namespace {

// Row scaled into Z[q]: every entry times q^-minshift * lcm(den).
std::vector<Poly> clear_row(const std::vector<RatFun>& row) {
    long min_shift = 0;
    bool any = false;
    Poly l(1);
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        if (!any || x.shift() < min_shift) min_shift = x.shift();
        any = true;
        if (!x.den().is_one()) {
            Poly g = Poly::gcd(l, x.den());
            Poly quo;
            Poly::divides(g, x.den(), &quo);
            l = l * quo;
        }
    }
    std::vector<Poly> out(row.size());
    if (!any) return out;
    for (std::size_t k = 0; k < row.size(); ++k) {
        const auto& x = row[k];
        if (x.is_zero()) continue;
        Poly quo;
        Poly::divides(x.den(), l, &quo);
        out[k] = (x.num() * quo).shift_up(static_cast<std::size_t>(x.shift() - min_shift));
    }
    return out;
}

}  // namespace

std::size_t matrix_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::vector<std::vector<Poly>> p(rows);
    for (std::size_t i = 0; i < rows; ++i) p[i] = clear_row(m[i]);
    Poly prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (p[i][c].is_zero()) continue;
            if (piv == rows || p[i][c].size() < p[piv][c].size()) piv = i;
        }
        if (piv == rows) continue;
        std::swap(p[r], p[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Poly v = p[r][c] * p[i][j] - p[i][c] * p[r][j];
                Poly quo;
                if (!Poly::divides(prev, v, &quo)) throw std::logic_error("fraction-free elimination lost exactness");
                p[i][j] = std::move(quo);
            }
            p[i][c] = Poly();
        }
        prev = p[r][c];
        ++r;
    }
    return r;
}

namespace {

// Reduced row echelon form of [a | b]; returns the pivot columns of a.
std::vector<std::size_t> reduce(RatMatrix& a, std::vector<RatFun>& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            if (piv == rows || a[i][c].num().size() + a[i][c].den().size() <
                                   a[piv][c].num().size() + a[piv][c].den().size())
                piv = i;
        }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        RatFun inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            RatFun f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            }
            b[i] -= f * b[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMatrix component(const ScalarMatrix& a, int sign) {
    RatMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m[i].reserve(a[i].size());
        for (const auto& x : a[i]) m[i].push_back(x.specialize(sign));
    }
    return m;
}

}  // namespace

std::optional<std::vector<RatFun>> solve(RatMatrix a, std::vector<RatFun> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivots = reduce(a, b);
    for (std::size_t i = pivots.size(); i < rows; ++i) {
        if (!b[i].is_zero()) return std::nullopt;
    }
    std::vector<RatFun> x(cols);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = b[k];
    return x;
}

std::vector<std::vector<RatFun>> nullspace(RatMatrix a, std::size_t cols) {
    std::vector<RatFun> b(a.size());
    std::vector<std::size_t> pivots = reduce(a, b);
    std::vector<std::vector<RatFun>> out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (next < pivots.size() && pivots[next] == c) {
            ++next;
            continue;
        }
        std::vector<RatFun> v(cols);
        v[c] = RatFun(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][c];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<std::vector<Scalar>>> nullspace(const ScalarMatrix& a, std::size_t cols) {
    auto plus = nullspace(component(a, 1), cols);
    auto minus = nullspace(component(a, -1), cols);
    if (plus.size() != minus.size()) return std::nullopt;
    std::vector<std::vector<Scalar>> out(plus.size(), std::vector<Scalar>(cols));
    for (std::size_t k = 0; k < plus.size(); ++k) {
        for (std::size_t c = 0; c < cols; ++c) out[k][c] = Scalar(plus[k][c], minus[k][c]);
    }
    return out;
}

std::size_t matrix_rank(const ScalarMatrix& a, int sign) { return matrix_rank(component(a, sign)); }

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a, const std::vector<Scalar>& b) {
    std::optional<std::vector<RatFun>> comp[2];
    for (int s = 0; s < 2; ++s) {
        const int sign = s == 0 ? 1 : -1;
        RatMatrix m = component(a, sign);
        std::vector<RatFun> rhs;
        rhs.reserve(b.size());
        for (const auto& x : b) rhs.push_back(x.specialize(sign));
        comp[s] = solve(std::move(m), std::move(rhs));
        if (!comp[s]) return std::nullopt;
    }
    std::vector<Scalar> x;
    x.reserve(comp[0]->size());
    for (std::size_t k = 0; k < comp[0]->size(); ++k) x.emplace_back((*comp[0])[k], (*comp[1])[k]);
    return x;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& a) {
    const std::size_t n = a.size();
    ScalarMatrix out(n, std::vector<Scalar>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Scalar> e(n);
        e[c] = Scalar(1);
        auto x = solve(a, e);
        if (!x) return std::nullopt;
        for (std::size_t r = 0; r < n; ++r) out[r][c] = (*x)[r];
    }
    // A solution exists for every column only when A is invertible, provided
    // the system is square; double-check the product.
    ScalarMatrix check = multiply(a, out);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (check[i][j] != Scalar(i == j ? 1 : 0)) return std::nullopt;
        }
    }
    return out;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    ScalarMatrix r(n, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

}  // namespace qcov
