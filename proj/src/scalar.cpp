#include "qcov/scalar.hpp"

namespace qcov {

namespace {

const RatFun& half() {
    static const RatFun h(0, Poly(1), Poly(2));
    return h;
}

}  // namespace

Scalar Scalar::from_parts(const RatFun& f, const RatFun& g) { return {f + g, f - g}; }

Scalar Scalar::pi() { return {RatFun(1), RatFun(-1)}; }

Scalar Scalar::pi_power(long k) { return (k % 2 == 0) ? Scalar(1) : pi(); }

Scalar Scalar::q_power(long k) {
    RatFun r = RatFun::q_power(k);
    return {r, r};
}

Scalar Scalar::piq_power(long k) { return monomial(k, k); }

Scalar Scalar::monomial(long pi_exp, long q_exp) {
    RatFun r = RatFun::q_power(q_exp);
    if (pi_exp % 2 == 0) return {r, r};
    return {r, -r};
}

RatFun Scalar::even_part() const { return (plus_ + minus_) * half(); }

RatFun Scalar::pi_part() const { return (plus_ - minus_) * half(); }

Scalar& Scalar::operator+=(const Scalar& o) {
    plus_ += o.plus_;
    minus_ += o.minus_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    plus_ -= o.plus_;
    minus_ -= o.minus_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    plus_ *= o.plus_;
    minus_ *= o.minus_;
    return *this;
}

Scalar Scalar::inverse() const {
    const bool zp = plus_.is_zero();
    const bool zm = minus_.is_zero();
    if (zp && zm) throw ScalarError(ScalarError::Kind::Zero, "inverse of zero");
    if (zp || zm) throw ScalarError(ScalarError::Kind::ZeroDivisor, "inverse of a zero divisor: " + to_string());
    return {plus_.inverse(), minus_.inverse()};
}

Scalar Scalar::pow(long n) const { return {plus_.pow(n), minus_.pow(n)}; }

Scalar Scalar::bar() const { return {plus_.invert_variable(), minus_.negate_invert_variable()}; }

bool Scalar::is_integral() const { return even_part().is_laurent() && pi_part().is_laurent(); }

std::string Scalar::to_string() const {
    RatFun f = even_part();
    RatFun g = pi_part();
    if (g.is_zero()) return f.to_string();
    std::string gs;
    if (g.is_one()) {
        gs = "pi";
    } else if ((-g).is_one()) {
        gs = "-pi";
    } else {
        gs = "pi*(" + g.to_string() + ")";
    }
    if (f.is_zero()) return gs;
    if (gs[0] == '-') return f.to_string() + " - " + gs.substr(1);
    return f.to_string() + " + " + gs;
}

long binom2(long n) { return n * (n - 1) / 2; }

Scalar qint(long n, long d, long e) {
    if (e < 0) e = d;
    if (n == 0) return Scalar();
    if (n < 0) return -(pi_pow(e * -n) * qint(-n, d, e));
    Scalar s;
    for (long k = 0; k < n; ++k) s += Scalar::monomial(e * (n - 1 - k), d * (n - 1 - k) - d * k);
    return s;
}

Scalar qfact(long n, long d, long e) {
    if (n < 0) throw std::invalid_argument("qfact of a negative integer");
    Scalar s(1);
    for (long k = 2; k <= n; ++k) s *= qint(k, d, e);
    return s;
}

Scalar qbinom(long n, long k, long d, long e) {
    if (k < 0) throw std::invalid_argument("qbinom with negative lower index");
    if (k == 0) return Scalar(1);
    if (n >= 0 && n < k) return Scalar();
    Scalar num(1);
    for (long l = n - k + 1; l <= n; ++l) num *= qint(l, d, e);
    return num / qfact(k, d, e);
}

}  // namespace qcov
