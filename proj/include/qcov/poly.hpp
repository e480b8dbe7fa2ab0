#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qcov {

using Integer = mpz_class;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, stored lowest degree first. The zero polynomial has no
/// coefficients; otherwise the top coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Integer> coeffs);
    Poly(long c);  // NOLINT(google-explicit-constructor)

    static Poly monomial(Integer c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const Integer& operator[](std::size_t k) const { return c_[k]; }
    Integer coeff(long k) const;
    const Integer& leading() const { return c_.back(); }
    const std::vector<Integer>& coeffs() const { return c_; }

    /// Number of vanishing low-order coefficients (q-adic valuation).
    std::size_t valuation() const;
    /// Divide by q^k; the low k coefficients must vanish.
    Poly shift_down(std::size_t k) const;
    Poly shift_up(std::size_t k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Integer& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Integer& c) { return a *= c; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    std::strong_ordering compare(const Poly& o) const;

    Integer content() const;
    /// Primitive part with positive leading coefficient.
    Poly primitive() const;
    /// Exact division by an integer (every coefficient divisible).
    Poly div_exact(const Integer& c) const;

    /// p(-q)
    Poly negate_variable() const;
    /// q^deg * p(1/q)
    Poly reversed() const;

    Integer eval(const Integer& x) const;

    /// Exact quotient a / b in Z[q]; returns false if b does not divide a.
    static bool divides(const Poly& b, const Poly& a, Poly* quotient);
    /// Primitive part of the gcd in Z[q], positive leading coefficient.
    static Poly gcd(const Poly& a, const Poly& b);

    std::string to_string(const std::string& var = "q", long shift = 0) const;

private:
    void trim();
    std::vector<Integer> c_;
};

}  // namespace qcov
