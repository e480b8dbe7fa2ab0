#pragma once

#include "qcov/poly.hpp"

#include <string>

namespace qcov {

/// Element of Q(q) kept in canonical form q^shift * num / den with
/// num(0) != 0, den(0) != 0, gcd(num, den) = 1, coprime integer contents and
/// a positive leading coefficient on den. Zero is 0/1 with shift 0, so
/// structural equality is value equality.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(long c);  // NOLINT(google-explicit-constructor)
    RatFun(const Integer& c);  // NOLINT(google-explicit-constructor)
    /// q^shift * num / den, normalised.
    RatFun(long shift, Poly num, Poly den);

    static RatFun q_power(long k);
    /// Laurent polynomial with coefficients c[0..] at exponents shift, shift+1, ...
    static RatFun laurent(long shift, const Poly& p);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    /// True when the value lies in Z[q, q^-1].
    bool is_laurent() const { return den_.is_one(); }

    long shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    RatFun inverse() const;
    RatFun pow(long n) const;

    bool operator==(const RatFun& o) const {
        return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// f(q^-1)
    RatFun invert_variable() const;
    /// f(-q)
    RatFun negate_variable() const;
    /// f(-q^-1)
    RatFun negate_invert_variable() const { return invert_variable().negate_variable(); }

    /// Coefficient of q^k when is_laurent().
    Integer laurent_coeff(long k) const;
    long laurent_min() const { return shift_; }
    long laurent_max() const { return shift_ + num_.degree(); }

    std::string to_string() const;

private:
    void normalise();
    long shift_ = 0;
    Poly num_;
    Poly den_;
};

}  // namespace qcov
