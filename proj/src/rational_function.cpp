#include "qcov/rational_function.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qcov {

RatFun::RatFun(long c) : num_(c), den_(1) {}

RatFun::RatFun(const Integer& c) : den_(1) {
    if (c != 0) num_ = Poly(std::vector<Integer>{c});
}

RatFun::RatFun(long shift, Poly num, Poly den) : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalise();
}

RatFun RatFun::q_power(long k) {
    RatFun r(1);
    r.shift_ = k;
    return r;
}

RatFun RatFun::laurent(long shift, const Poly& p) {
    RatFun r;
    if (p.is_zero()) return r;
    std::size_t v = p.valuation();
    r.shift_ = shift + static_cast<long>(v);
    r.num_ = p.shift_down(v);
    return r;
}

void RatFun::normalise() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly(1);
        return;
    }
    std::size_t vn = num_.valuation();
    std::size_t vd = den_.valuation();
    shift_ += static_cast<long>(vn) - static_cast<long>(vd);
    num_ = num_.shift_down(vn);
    den_ = den_.shift_down(vd);
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly qn;
            Poly qd;
            Poly::divides(g, num_, &qn);
            Poly::divides(g, den_, &qd);
            num_ = std::move(qn);
            den_ = std::move(qd);
        }
    }
    Integer cn = num_.content();
    Integer cd = den_.content();
    Integer g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading() < 0) g = -g;
    if (g != 1) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long m = std::min(shift_, o.shift_);
    const auto ua = static_cast<std::size_t>(shift_ - m);
    const auto ub = static_cast<std::size_t>(o.shift_ - m);
    if (den_.is_one() && o.den_.is_one()) {
        Poly sum = num_.shift_up(ua) + o.num_.shift_up(ub);
        *this = laurent(m, sum);
        return *this;
    }
    if (den_ == o.den_) {
        num_ = num_.shift_up(ua) + o.num_.shift_up(ub);
        shift_ = m;
        normalise();
        return *this;
    }
    num_ = num_.shift_up(ua) * o.den_ + o.num_.shift_up(ub) * den_;
    den_ = den_ * o.den_;
    shift_ = m;
    normalise();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) return *this = RatFun();
    shift_ += o.shift_;
    num_ = num_ * o.num_;
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ = den_ * o.den_;
    normalise();
    return *this;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    RatFun r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    r.normalise();
    return r;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    RatFun result(1);
    RatFun base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

RatFun RatFun::invert_variable() const {
    if (is_zero()) return *this;
    RatFun r;
    r.shift_ = -shift_ - num_.degree() + den_.degree();
    r.num_ = num_.reversed();
    r.den_ = den_.reversed();
    r.normalise();
    return r;
}

RatFun RatFun::negate_variable() const {
    if (is_zero()) return *this;
    RatFun r;
    r.shift_ = shift_;
    r.num_ = num_.negate_variable();
    r.den_ = den_.negate_variable();
    if (shift_ % 2 != 0) r.num_ = -r.num_;
    r.normalise();
    return r;
}

Integer RatFun::laurent_coeff(long k) const {
    if (!den_.is_one()) throw std::logic_error("laurent_coeff on a non-Laurent value");
    return num_.coeff(k - shift_);
}

std::string RatFun::to_string() const {
    std::string n = num_.to_string("q", shift_);
    if (den_.is_one()) return n;
    return "(" + n + ")/(" + den_.to_string("q") + ")";
}

}  // namespace qcov
