#include "qcov/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qcov {

Poly::Poly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly Poly::monomial(Integer c, std::size_t degree) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(degree + 1, Integer(0));
    p.c_[degree] = std::move(c);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return Integer(0);
    return c_[static_cast<std::size_t>(k)];
}

std::size_t Poly::valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
}

Poly Poly::shift_down(std::size_t k) const {
    if (k == 0 || c_.empty()) return *this;
    Poly r;
    r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
    return r;
}

Poly Poly::shift_up(std::size_t k) const {
    if (k == 0 || c_.empty()) return *this;
    Poly r;
    r.c_.assign(k, Integer(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Integer& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

std::strong_ordering Poly::compare(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
    for (std::size_t k = c_.size(); k-- > 0;) {
        int s = cmp(c_[k], o.c_[k]);
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Integer Poly::content() const {
    Integer g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::div_exact(const Integer& c) const {
    Poly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

Poly Poly::primitive() const {
    if (c_.empty()) return *this;
    Integer g = content();
    if (c_.back() < 0) g = -g;
    if (g == 1) return *this;
    return div_exact(g);
}

Poly Poly::negate_variable() const {
    Poly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

Poly Poly::reversed() const {
    Poly r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.trim();
    return r;
}

Integer Poly::eval(const Integer& x) const {
    Integer acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc *= x;
        acc += c_[k];
    }
    return acc;
}

bool Poly::divides(const Poly& b, const Poly& a, Poly* quotient) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) {
        if (quotient) *quotient = Poly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Integer> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<Integer> q(rem.size() - db, Integer(0));
    const Integer& lb = b.c_.back();
    Integer t;
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        if (!mpz_divisible_p(rem[k].get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), lb.get_mpz_t());
        const std::size_t off = k - db;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[off + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
        }
        q[off] = t;
    }
    for (std::size_t k = 0; k < db; ++k) {
        if (rem[k] != 0) return false;
    }
    if (quotient) *quotient = Poly(std::move(q));
    return true;
}

namespace {

// Pseudo-remainder of a by b.
Poly pseudo_remainder(const Poly& a, const Poly& b) {
    std::vector<Integer> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Integer& lb = bc.back();
    while (rem.size() > db && !rem.empty()) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        Integer lr = rem.back();
        const std::size_t off = rem.size() - 1 - db;
        for (auto& x : rem) x *= lb;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[off + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
        }
        rem.pop_back();
    }
    return Poly(std::move(rem));
}

Poly gcd_primitive_prs(Poly a, Poly b) {
    a = a.primitive();
    b = b.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive();
    }
    return a.primitive();
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and
// read the candidate back off in balanced base-xi digits.
bool gcd_heuristic(const Poly& a, const Poly& b, Poly* out) {
    Integer bound = 0;
    for (const auto& x : a.coeffs()) {
        if (abs(x) > bound) bound = abs(x);
    }
    for (const auto& x : b.coeffs()) {
        if (abs(x) > bound) bound = abs(x);
    }
    Integer xi = 2 * bound + 29;
    for (int attempt = 0; attempt < 4; ++attempt) {
        Integer ga = a.eval(xi);
        Integer gb = b.eval(xi);
        Integer g;
        mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
        std::vector<Integer> digits;
        Integer half = xi / 2;
        while (g != 0) {
            Integer d;
            mpz_fdiv_r(d.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            digits.push_back(d);
            g -= d;
            mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
        }
        Poly cand = Poly(std::move(digits)).primitive();
        if (!cand.is_zero() && Poly::divides(cand, a, nullptr) && Poly::divides(cand, b, nullptr)) {
            *out = cand;
            return true;
        }
        xi = xi * 73794 / 27011;
    }
    return false;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.degree() == 0 || b.degree() == 0) return Poly(1);
    Poly pa = a.primitive();
    Poly pb = b.primitive();
    if (pa == pb) return pa;
    Poly g;
    if (gcd_heuristic(pa, pb, &g)) return g;
    return gcd_primitive_prs(pa, pb);
}

std::string Poly::to_string(const std::string& var, long shift) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Integer& c = c_[k];
        if (c == 0) continue;
        long e = static_cast<long>(k) + shift;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace qcov
