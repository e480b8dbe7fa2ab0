#include "qcov/braid.hpp"

#include <sstream>

namespace qcov {

bool BraidRelationReport::ok() const {
    for (const auto& c : checks)
        if (!c.second) return false;
    return true;
}

CoverElement BraidGroupAction::generator_image(int i, int sign, const Generator& g) const {
    const CartanDatum& c = u_.datum();
    const HalfAlgebra& f = u_.half();
    switch (g.kind) {
        case Generator::Kind::K:
            return u_.K(c.reflect_coweight(i, g.mu));
        case Generator::Kind::J:
            return u_.J(c.reflect_coweight(i, g.mu));
        case Generator::Kind::E:
        case Generator::Kind::F:
            break;
    }
    const bool is_e = g.kind == Generator::Kind::E;
    const int j = g.index;
    const long n = g.power;
    if (n < 0) return {};
    if (j == i) {
        const Scalar s = Scalar(n % 2 == 0 ? 1 : -1);
        if (is_e && sign > 0) {
            // (-1)^n pi_i^n q_i^{n(n-1)} J~_i^n K~_i^n F_i^(n)
            return u_.multiply(u_.torus(u_.tilde_torus(i, n, n)), u_.F(i, n)) * (s * f.mono_i(i, n, n * (n - 1)));
        }
        if (is_e) return u_.multiply(u_.F(i, n), u_.Ktilde(i, -n)) * (s * f.mono_i(i, 0, n * (n - 1)));
        if (sign > 0) return u_.multiply(u_.E(i, n), u_.Ktilde(i, -n)) * (s * f.mono_i(i, 0, -n * (n - 1)));
        return u_.multiply(u_.torus(u_.tilde_torus(i, n, n)), u_.E(i, n)) * (s * f.mono_i(i, n, -n * (n - 1)));
    }
    const long a = c.a(i, j);
    const CoverElement jt = u_.Jtilde(i, n * c.parity(j));
    if (is_e) {
        CoverElement s = u_.higher_serre(sign > 0 ? SerreKind::E : SerreKind::EPrime, i, j, n, -n * a);
        return u_.multiply(jt, s) * f.mono_i(i, binom2(n * a), 0);
    }
    return u_.multiply(jt, u_.higher_serre(sign > 0 ? SerreKind::F : SerreKind::FPrime, i, j, n, -n * a));
}

CoverElement BraidGroupAction::word_image(int i, int sign, bool is_e, const FreeWord& w) const {
    if (w.empty()) return u_.one();
    auto key = std::make_tuple(i, sign, is_e, w);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = word_memo_.find(key);
        if (it != word_memo_.end()) return it->second;
    }
    const int last = w.back();
    CoverElement g = generator_image(i, sign, is_e ? Generator::e(last) : Generator::f(last));
    CoverElement r = u_.multiply(word_image(i, sign, is_e, w.substr(0, w.size() - 1)), g);
    std::lock_guard<std::mutex> lock(mu_);
    word_memo_.emplace(std::move(key), r);
    return r;
}

CoverElement BraidGroupAction::monomial_image(int i, int sign, const Monomial& m) const {
    const CartanDatum& c = u_.datum();
    Torus t{c.reflect_coweight(i, m.t.j), c.reflect_coweight(i, m.t.k)};
    return u_.product({word_image(i, sign, false, m.f), u_.torus(t), word_image(i, sign, true, m.e)});
}

CoverElement BraidGroupAction::apply(int i, int sign, const CoverElement& x) const {
    CoverElement r;
    for (const auto& [m, c] : x) r.add(monomial_image(i, sign, m), c);
    return r;
}

CoverElement BraidGroupAction::apply(const BraidWord& w, const CoverElement& x) const {
    CoverElement r = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply(it->index, it->sign, r);
    return r;
}

std::vector<std::pair<std::string, CoverElement>> BraidGroupAction::generators() const {
    std::vector<std::pair<std::string, CoverElement>> out;
    const int n = u_.rank();
    for (int k = 0; k < n; ++k) {
        const std::string idx = std::to_string(k + 1);
        Coweight mu(n, 0);
        mu[k] = 1;
        out.emplace_back("E_" + idx, u_.E(k));
        out.emplace_back("F_" + idx, u_.F(k));
        out.emplace_back("K" + CoverAlgebra::monomial_to_string(Monomial{"", {Coweight(n, 0), mu}, ""}).substr(1), u_.K(mu));
        out.emplace_back("J" + CoverAlgebra::monomial_to_string(Monomial{"", {mu, Coweight(n, 0)}, ""}).substr(1), u_.J(mu));
    }
    return out;
}

BraidRelationReport BraidGroupAction::verify_braid_relation(int i, int j) const {
    const int m = u_.datum().braid_order(i, j);
    if (m == kInfiniteOrder) throw InfiniteOrder("braid order of the pair is infinite");
    BraidRelationReport rep;
    rep.i = i;
    rep.j = j;
    rep.order = m;
    BraidWord lhs, rhs;
    for (int k = 0; k < m; ++k) {
        lhs.push_back({k % 2 == 0 ? i : j, 1});
        rhs.push_back({k % 2 == 0 ? j : i, 1});
    }
    for (const auto& [name, g] : generators()) {
        rep.checks.emplace_back(name, u_.equals(apply(lhs, g), apply(rhs, g)));
    }
    return rep;
}

CoverElement BraidGroupAction::e_small(int i, int j, long m) const { return u_.higher_serre(SerreKind::E, i, j, 1, m); }

CoverElement BraidGroupAction::e_small_prime(int i, int j, long m) const {
    return u_.higher_serre(SerreKind::EPrime, i, j, 1, m);
}

bool BraidGroupAction::divided_power_integral(const CoverElement& x) const {
    const HalfAlgebra& f = u_.half();
    auto runs = [&](const FreeWord& w) {
        Scalar s(1);
        std::size_t k = 0;
        while (k < w.size()) {
            std::size_t len = 1;
            while (k + len < w.size() && w[k + len] == w[k]) ++len;
            s *= f.qfact_i(static_cast<long>(len), w[k]);
            k += len;
        }
        return s;
    };
    for (const auto& [m, c] : x) {
        if (!(c * runs(m.f) * runs(m.e)).is_integral()) return false;
    }
    return true;
}

bool BraidGroupAction::integral_image_check(int i, long n, int j) const {
    for (int sign : {1, -1}) {
        if (!divided_power_integral(generator_image(i, sign, Generator::e(j, n)))) return false;
        if (!divided_power_integral(generator_image(i, sign, Generator::f(j, n)))) return false;
    }
    return true;
}

BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 'T') throw std::invalid_argument("bad braid letter '" + tok + "'");
        std::size_t pos = 1;
        std::size_t used = 0;
        int idx = 0;
        try {
            idx = std::stoi(tok.substr(pos), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad braid letter '" + tok + "'");
        }
        pos += used;
        int sign = 1;
        if (pos < tok.size()) {
            if (tok.substr(pos) != "^-1") throw std::invalid_argument("bad braid letter '" + tok + "'");
            sign = -1;
        }
        if (idx < 1) throw std::invalid_argument("braid index must be positive in '" + tok + "'");
        w.push_back({idx - 1, sign});
    }
    return w;
}

std::string braid_word_to_string(const BraidWord& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += "T" + std::to_string(l.index + 1);
        if (l.sign < 0) s += "^-1";
    }
    return s;
}

}  // namespace qcov
