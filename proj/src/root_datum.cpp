#include "qcov/root_datum.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace qcov {

std::string DatumError::name(Axiom a) {
    switch (a) {
        case Axiom::Shape: return "shape";
        case Axiom::C1: return "C1";
        case Axiom::C2: return "C2";
        case Axiom::C3: return "C3";
        case Axiom::C4: return "C4";
        case Axiom::P1: return "P1";
        case Axiom::P2: return "P2";
        case Axiom::Gcd: return "gcd";
    }
    return "?";
}

std::optional<DatumError> CartanDatum::check(const std::vector<std::vector<long>>& a, const std::vector<int>& p,
                                             const std::vector<long>& d) {
    using A = DatumError::Axiom;
    const std::size_t n = a.size();
    if (n == 0) return DatumError(A::Shape, "empty Cartan matrix");
    for (const auto& row : a) {
        if (row.size() != n) return DatumError(A::Shape, "Cartan matrix is not square");
    }
    if (p.size() != n || d.size() != n) return DatumError(A::Shape, "parity and d must have one entry per index");
    for (int x : p) {
        if (x != 0 && x != 1) return DatumError(A::Shape, "parity entries must be 0 or 1");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) return DatumError(A::C1, "C1: a_" + std::to_string(i + 1) + std::to_string(i + 1) + " != 2");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) return DatumError(A::C2, "C2: positive off-diagonal entry");
            if ((a[i][j] == 0) != (a[j][i] == 0)) return DatumError(A::C3, "C3: a_ij = 0 but a_ji != 0");
        }
    }
    for (long x : d) {
        if (x <= 0) return DatumError(A::C4, "C4: d must be positive");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] != 1) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] % 2 != 0) return DatumError(A::P1, "P1: odd row " + std::to_string(i + 1) + " has an odd entry");
        }
    }
    // Purely even data are accepted without the parity condition on d so
    // that classical Cartan data can be used at pi = 1.
    const bool has_odd = std::find(p.begin(), p.end(), 1) != p.end();
    for (std::size_t i = 0; has_odd && i < n; ++i) {
        if (d[i] % 2 != p[i]) return DatumError(A::P2, "P2: d_" + std::to_string(i + 1) + " has the wrong parity");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (d[i] * a[i][j] != d[j] * a[j][i]) return DatumError(A::C4, "C4: DA is not symmetric");
        }
    }
    long g = 0;
    for (long x : d) g = std::gcd(g, x);
    if (g != 1) return DatumError(A::Gcd, "gcd(d) != 1");
    return std::nullopt;
}

CartanDatum::CartanDatum(std::vector<std::vector<long>> cartan, std::vector<int> parity, std::vector<long> d)
    : a_(std::move(cartan)), p_(std::move(parity)), d_(std::move(d)) {
    if (auto err = check(a_, p_, d_)) throw *err;
}

CartanDatum CartanDatum::rank1_odd() { return CartanDatum({{2}}, {1}, {1}); }
CartanDatum CartanDatum::rank1_even() { return CartanDatum({{2}}, {0}, {2}); }
CartanDatum CartanDatum::spin_rank2() { return CartanDatum({{2, 0}, {0, 2}}, {1, 1}, {1, 1}); }
CartanDatum CartanDatum::b2_super() { return CartanDatum({{2, -2}, {-1, 2}}, {1, 0}, {1, 2}); }
CartanDatum CartanDatum::a2() { return CartanDatum({{2, -1}, {-1, 2}}, {0, 0}, {1, 1}); }

long CartanDatum::symmetric_form(const RootVec& mu, const RootVec& nu) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (mu[i] == 0) continue;
        s += mu[i] * dot_simple(i, nu);
    }
    return s;
}

long CartanDatum::dot_simple(int i, const RootVec& nu) const {
    long s = 0;
    for (int j = 0; j < rank(); ++j) s += d_[i] * a_[i][j] * nu[j];
    return s;
}

int CartanDatum::parity(const RootVec& nu) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) s += nu[i] * p_[i];
    return static_cast<int>(((s % 2) + 2) % 2);
}

long CartanDatum::height(const RootVec& nu) const { return std::accumulate(nu.begin(), nu.end(), 0L); }

RootVec CartanDatum::simple_root(int i) const {
    RootVec r(a_.size(), 0);
    r[i] = 1;
    return r;
}

Weight CartanDatum::root_to_weight(const RootVec& nu) const {
    Weight w(a_.size(), 0);
    for (int i = 0; i < rank(); ++i) w[i] = coroot_pairing(i, nu);
    return w;
}

long CartanDatum::coroot_pairing(int i, const RootVec& nu) const {
    long s = 0;
    for (int j = 0; j < rank(); ++j) s += a_[i][j] * nu[j];
    return s;
}

long CartanDatum::pair_coweight_root(const Coweight& mu, int j) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) s += mu[i] * a_[i][j];
    return s;
}

long CartanDatum::pair_coweight_root(const Coweight& mu, const RootVec& nu) const {
    long s = 0;
    for (int j = 0; j < rank(); ++j) {
        if (nu[j] != 0) s += nu[j] * pair_coweight_root(mu, j);
    }
    return s;
}

long CartanDatum::pair_coweight_weight(const Coweight& mu, const Weight& lambda) {
    long s = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] * lambda[i];
    return s;
}

Coweight CartanDatum::tilde_coroot(int i) const {
    Coweight c(a_.size(), 0);
    c[i] = d_[i];
    return c;
}

Coweight CartanDatum::tilde(const RootVec& nu) const {
    Coweight c(a_.size(), 0);
    for (int i = 0; i < rank(); ++i) c[i] = d_[i] * nu[i];
    return c;
}

Weight CartanDatum::reflect_weight(int i, const Weight& lambda) const {
    Weight r = lambda;
    const long c = lambda[i];
    for (int j = 0; j < rank(); ++j) r[j] -= c * a_[j][i];
    return r;
}

RootVec CartanDatum::reflect_root(int i, const RootVec& nu) const {
    RootVec r = nu;
    r[i] -= coroot_pairing(i, nu);
    return r;
}

Coweight CartanDatum::reflect_coweight(int i, const Coweight& mu) const {
    Coweight r = mu;
    r[i] -= pair_coweight_root(mu, i);
    return r;
}

Weight CartanDatum::apply_word_weight(const Word& w, Weight lambda) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) lambda = reflect_weight(*it, lambda);
    return lambda;
}

RootVec CartanDatum::apply_word_root(const Word& w, RootVec nu) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) nu = reflect_root(*it, nu);
    return nu;
}

Coweight CartanDatum::apply_word_coweight(const Word& w, Coweight mu) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) mu = reflect_coweight(*it, mu);
    return mu;
}

int CartanDatum::braid_order(int i, int j) const {
    switch (a_[i][j] * a_[j][i]) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return kInfiniteOrder;
    }
}

bool CartanDatum::is_finite_type() const {
    // Leading principal minors of the symmetrised matrix, by fraction-free
    // elimination.
    const int n = rank();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = d_[i] * a_[i][j];
    }
    mpz_class prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return true;
}

bool is_positive_root(const RootVec& nu) {
    bool any = false;
    for (long x : nu) {
        if (x < 0) return false;
        if (x > 0) any = true;
    }
    return any;
}

std::vector<RootVec> CartanDatum::positive_roots() const {
    if (!is_finite_type()) throw NotFiniteType("positive roots requested for a datum of infinite type");
    std::set<RootVec> seen;
    std::vector<RootVec> frontier;
    for (int i = 0; i < rank(); ++i) {
        frontier.push_back(simple_root(i));
        seen.insert(simple_root(i));
    }
    while (!frontier.empty()) {
        RootVec r = frontier.back();
        frontier.pop_back();
        for (int i = 0; i < rank(); ++i) {
            RootVec s = reflect_root(i, r);
            if (is_positive_root(s) && seen.insert(s).second) frontier.push_back(s);
        }
    }
    return {seen.begin(), seen.end()};
}

Word CartanDatum::longest_word() const {
    if (!is_finite_type()) throw NotFiniteType("longest word requested for a datum of infinite type");
    Word w;
    for (;;) {
        bool extended = false;
        for (int i = 0; i < rank(); ++i) {
            if (is_positive_root(apply_word_root(w, simple_root(i)))) {
                w.push_back(i);
                extended = true;
                break;
            }
        }
        if (!extended) return w;
    }
}

bool CartanDatum::word_is_reduced(const Word& w) const {
    Word prefix;
    for (int i : w) {
        if (!is_positive_root(apply_word_root(prefix, simple_root(i)))) return false;
        prefix.push_back(i);
    }
    return true;
}

std::vector<int> CartanDatum::spin(const Weight& lambda) const {
    std::vector<int> s(a_.size(), 0);
    for (int i = 0; i < rank(); ++i) {
        if (p_[i] == 1) s[i] = static_cast<int>(((lambda[i] % 2) + 2) % 2);
    }
    return s;
}

BraidRelationKind CartanDatum::spin_braid_relation_kind(int i, int j, const std::vector<int>& varpi) const {
    if (varpi[i] == 1 && varpi[j] == 1 && a_[i][j] == 0) return BraidRelationKind::Spin;
    return BraidRelationKind::Ordinary;
}

}  // namespace qcov
