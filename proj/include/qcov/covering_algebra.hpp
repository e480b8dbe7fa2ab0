#pragma once

#include "qcov/half_algebra.hpp"

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qcov {

/// J_j K_k with j, k in simple-coroot coordinates; j is kept reduced mod 2.
struct Torus {
    Coweight j;
    Coweight k;

    static Torus identity(int rank) { return {Coweight(rank, 0), Coweight(rank, 0)}; }
    bool is_identity() const;
    Torus operator*(const Torus& o) const;
    Torus inverse() const;
    auto operator<=>(const Torus&) const = default;
};

/// F-word * torus * E-word.
struct Monomial {
    FreeWord f;
    Torus t;
    FreeWord e;

    auto operator<=>(const Monomial&) const = default;
};

using CoverElement = LinComb<Monomial>;
using CoverTensor = LinComb<std::pair<Monomial, Monomial>>;

enum class SerreKind { E, EPrime, F, FPrime };

/// The quantum covering group U with elements kept in triangular normal form.
class CoverAlgebra {
public:
    explicit CoverAlgebra(CartanDatum datum);

    const CartanDatum& datum() const { return f_.datum(); }
    const HalfAlgebra& half() const { return f_; }
    int rank() const { return f_.rank(); }

    CoverElement one() const;
    CoverElement scalar(const Scalar& c) const;
    /// Divided powers E_i^(n), F_i^(n); zero for n < 0.
    CoverElement E(int i, long n = 1) const;
    CoverElement F(int i, long n = 1) const;
    CoverElement K(const Coweight& mu) const;
    CoverElement J(const Coweight& mu) const;
    CoverElement torus(const Torus& t) const;
    /// K~_i^n and J~_i^n.
    CoverElement Ktilde(int i, long n = 1) const;
    CoverElement Jtilde(int i, long n = 1) const;
    /// x^+ and x^- for x in f.
    CoverElement plus(const HalfElement& x) const;
    CoverElement minus(const HalfElement& x) const;

    Torus tilde_torus(int i, long jn, long kn) const;
    Monomial monomial(const FreeWord& f, const Torus& t, const FreeWord& e) const { return {f, t, e}; }

    CoverElement multiply(const CoverElement& x, const CoverElement& y) const;
    CoverElement multiply(const Monomial& a, const Monomial& b) const;
    CoverElement product(const std::vector<CoverElement>& xs) const;
    CoverElement power(const CoverElement& x, long n) const;

    RootVec weight(const Monomial& m) const;
    int parity(const Monomial& m) const;

    bool is_zero(const CoverElement& x) const;
    bool equals(const CoverElement& x, const CoverElement& y) const { return is_zero(x - y); }

    CoverElement omega(const CoverElement& x) const;
    CoverElement sigma(const CoverElement& x) const;
    CoverElement bar(const CoverElement& x) const;

    CoverTensor coproduct(const CoverElement& x) const;
    /// (x (x) y)(x' (x) y') = pi^{p(x')p(y)} xx' (x) yy'
    CoverTensor tensor_multiply(const CoverTensor& a, const CoverTensor& b) const;
    bool is_zero(const CoverTensor& x) const;

    CoverElement higher_serre(SerreKind kind, int i, int j, long n, long m) const;

    /// [alpha_i^vee; n], reading v as q.
    CoverElement nu_bracket(int i, long n) const;
    /// prod_{s=1}^t [alpha_i^vee; n+1-s] / [t]_i!
    CoverElement nu_binomial(int i, long n, long t) const;

    std::string to_string(const CoverElement& x) const;
    static std::string monomial_to_string(const Monomial& m);

private:
    /// E_e * F_f in normal form.
    const CoverElement& straighten(const FreeWord& e, const FreeWord& f) const;
    CoverElement compute_straighten(const FreeWord& e, const FreeWord& f) const;
    /// Coefficient from moving the torus t to the right across F-letters of weight nu.
    Scalar torus_past_f(const Torus& t, const RootVec& nu) const;
    /// Coefficient from moving E-letters of weight nu to the right across t.
    Scalar e_past_torus(const RootVec& nu, const Torus& t) const;
    CoverElement omega_monomial(const Monomial& m) const;
    CoverElement sigma_monomial(const Monomial& m) const;
    CoverTensor coproduct_monomial(const Monomial& m) const;

    HalfAlgebra f_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, CoverElement> straighten_memo_;
};

}  // namespace qcov
