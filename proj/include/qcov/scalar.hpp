#pragma once

#include "qcov/rational_function.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace qcov {

class ScalarError : public std::domain_error {
public:
    enum class Kind { ZeroDivisor, Zero };
    ScalarError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Element of Q(q)[pi]/(pi^2 - 1), stored by its values at pi = 1 and pi = -1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : plus_(c), minus_(c) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Integer& c) : plus_(c), minus_(c) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(const RatFun& r) : plus_(r), minus_(r) {}
    Scalar(RatFun plus, RatFun minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

    /// f + pi*g
    static Scalar from_parts(const RatFun& f, const RatFun& g);
    static Scalar pi();
    static Scalar pi_power(long k);
    static Scalar q_power(long k);
    /// (pi q)^k
    static Scalar piq_power(long k);
    /// pi^a q^b
    static Scalar monomial(long pi_exp, long q_exp);

    const RatFun& plus() const { return plus_; }
    const RatFun& minus() const { return minus_; }
    /// f in f + pi*g
    RatFun even_part() const;
    /// g in f + pi*g
    RatFun pi_part() const;

    bool is_zero() const { return plus_.is_zero() && minus_.is_zero(); }
    bool is_one() const { return plus_.is_one() && minus_.is_one(); }
    bool is_unit() const { return !plus_.is_zero() && !minus_.is_zero(); }

    Scalar operator-() const { return {-plus_, -minus_}; }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    bool operator==(const Scalar& o) const { return plus_ == o.plus_ && minus_ == o.minus_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Throws ScalarError (ZeroDivisor or Zero) when not a unit.
    Scalar inverse() const;
    Scalar pow(long n) const;

    /// q -> pi q^-1
    Scalar bar() const;
    /// Value at pi = sign.
    const RatFun& specialize(int sign) const { return sign > 0 ? plus_ : minus_; }
    /// True when the value is f + pi*g with f, g in Z[q, q^-1].
    bool is_integral() const;

    std::string to_string() const;

private:
    RatFun plus_;
    RatFun minus_;
};

/// pi^e for an integer exponent (only the parity matters).
inline Scalar pi_pow(long e) { return Scalar::pi_power(e); }

/// Quantum integer [n] at q -> q^d, pi -> pi^e (e = d when omitted).
Scalar qint(long n, long d = 1, long e = -1);
/// [n]! at the same scaling, n >= 0.
Scalar qfact(long n, long d = 1, long e = -1);
/// Quantum binomial [n choose k], k >= 0, n any integer.
Scalar qbinom(long n, long k, long d = 1, long e = -1);

/// binom(n, 2) for any integer n.
long binom2(long n);

inline std::ostream& operator<<(std::ostream& os, const Scalar& c) { return os << c.to_string(); }

}  // namespace qcov
