#include "qcov/covering_algebra.hpp"

#include <sstream>

namespace qcov {

namespace {

long mod2(long x) { return ((x % 2) + 2) % 2; }

std::string coweight_text(const Coweight& c) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << '}';
    return os.str();
}

void append_word(std::ostringstream& os, const FreeWord& w, char symbol, bool& first) {
    std::size_t k = 0;
    while (k < w.size()) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (!first) os << '*';
        first = false;
        os << symbol << '_' << (static_cast<int>(w[k]) + 1);
        if (run > 1) os << '^' << run;
        k += run;
    }
}

}  // namespace

bool Torus::is_identity() const {
    for (long x : j)
        if (x != 0) return false;
    for (long x : k)
        if (x != 0) return false;
    return true;
}

Torus Torus::operator*(const Torus& o) const {
    Torus r = *this;
    for (std::size_t i = 0; i < j.size(); ++i) {
        r.j[i] = mod2(j[i] + o.j[i]);
        r.k[i] = k[i] + o.k[i];
    }
    return r;
}

Torus Torus::inverse() const {
    Torus r = *this;
    for (auto& x : r.k) x = -x;
    return r;
}

CoverAlgebra::CoverAlgebra(CartanDatum datum) : f_(std::move(datum)) {}

CoverElement CoverAlgebra::one() const { return CoverElement(Monomial{"", Torus::identity(rank()), ""}); }

CoverElement CoverAlgebra::scalar(const Scalar& c) const { return one() * c; }

CoverElement CoverAlgebra::E(int i, long n) const {
    if (n < 0) return {};
    return CoverElement(Monomial{"", Torus::identity(rank()), FreeWord(static_cast<std::size_t>(n), static_cast<char>(i))},
                        f_.qfact_i(n, i).inverse());
}

CoverElement CoverAlgebra::F(int i, long n) const {
    if (n < 0) return {};
    return CoverElement(Monomial{FreeWord(static_cast<std::size_t>(n), static_cast<char>(i)), Torus::identity(rank()), ""},
                        f_.qfact_i(n, i).inverse());
}

CoverElement CoverAlgebra::K(const Coweight& mu) const {
    Torus t = Torus::identity(rank());
    t.k = mu;
    return torus(t);
}

CoverElement CoverAlgebra::J(const Coweight& mu) const {
    Torus t = Torus::identity(rank());
    for (int i = 0; i < rank(); ++i) t.j[i] = mod2(mu[i]);
    return torus(t);
}

CoverElement CoverAlgebra::torus(const Torus& t) const {
    Torus r = t;
    for (auto& x : r.j) x = mod2(x);
    return CoverElement(Monomial{"", r, ""});
}

Torus CoverAlgebra::tilde_torus(int i, long jn, long kn) const {
    Torus t = Torus::identity(rank());
    t.j[i] = mod2(jn * datum().pi_scale(i));
    t.k[i] = kn * datum().d(i);
    return t;
}

CoverElement CoverAlgebra::Ktilde(int i, long n) const { return torus(tilde_torus(i, 0, n)); }

CoverElement CoverAlgebra::Jtilde(int i, long n) const { return torus(tilde_torus(i, n, 0)); }

CoverElement CoverAlgebra::plus(const HalfElement& x) const {
    CoverElement r;
    for (const auto& [w, c] : x) r.add(Monomial{"", Torus::identity(rank()), w}, c);
    return r;
}

CoverElement CoverAlgebra::minus(const HalfElement& x) const {
    CoverElement r;
    for (const auto& [w, c] : x) r.add(Monomial{w, Torus::identity(rank()), ""}, c);
    return r;
}

RootVec CoverAlgebra::weight(const Monomial& m) const {
    RootVec nu = f_.weight(m.e);
    RootVec neg = f_.weight(m.f);
    for (int i = 0; i < rank(); ++i) nu[i] -= neg[i];
    return nu;
}

int CoverAlgebra::parity(const Monomial& m) const { return f_.parity(m.f) ^ f_.parity(m.e); }

Scalar CoverAlgebra::torus_past_f(const Torus& t, const RootVec& nu) const {
    return Scalar::monomial(datum().pair_coweight_root(t.j, nu), -datum().pair_coweight_root(t.k, nu));
}

Scalar CoverAlgebra::e_past_torus(const RootVec& nu, const Torus& t) const {
    return Scalar::monomial(datum().pair_coweight_root(t.j, nu), -datum().pair_coweight_root(t.k, nu));
}

const CoverElement& CoverAlgebra::straighten(const FreeWord& e, const FreeWord& f) const {
    std::string key;
    key.reserve(e.size() + f.size() + 1);
    key.append(e);
    key.push_back('\x7f');
    key.append(f);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = straighten_memo_.find(key);
        if (it != straighten_memo_.end()) return it->second;
    }
    CoverElement r = compute_straighten(e, f);
    std::lock_guard<std::mutex> lock(mu_);
    return straighten_memo_.emplace(std::move(key), std::move(r)).first->second;
}

CoverElement CoverAlgebra::compute_straighten(const FreeWord& e, const FreeWord& f) const {
    const Torus id = Torus::identity(rank());
    if (e.empty() || f.empty()) return CoverElement(Monomial{f, id, e});
    const int a = e.back();
    const FreeWord e0 = e.substr(0, e.size() - 1);
    const long pa = datum().parity(a);
    const long pf = f_.parity(f);

    // E_a F_f = pi^{p(a)p(f)} F_f E_a
    //   + (pi_a^{p(f)-p(a)} r_a(f)^- J~_a K~_a - K~_{-a} (_a r(f))^-) / (pi_a q_a - q_a^{-1})
    CoverElement r;
    for (const auto& [m, c] : straighten(e0, f)) {
        Monomial n = m;
        n.e.push_back(static_cast<char>(a));
        r.add(n, c * pi_pow(pa * pf));
    }
    const Scalar inv = (f_.mono_i(a, 1, 1) - f_.mono_i(a, 0, -1)).inverse();
    const Torus jk = tilde_torus(a, 1, 1);
    const Torus kinv = tilde_torus(a, 0, -1);
    auto add_torus_terms = [&](const HalfElement& g, const Torus& t, const Scalar& scale, bool shift_k) {
        for (const auto& [w, c] : g) {
            Scalar coeff = c * scale;
            if (shift_k) coeff *= Scalar::q_power(datum().dot_simple(a, f_.weight(w)));
            for (const auto& [m, c2] : straighten(e0, w)) {
                r.add(Monomial{m.f, m.t * t, m.e}, coeff * c2 * e_past_torus(f_.weight(m.e), t));
            }
        }
    };
    add_torus_terms(f_.deriv_right(a, f), jk, inv * f_.mono_i(a, pf + pa, 0), false);
    add_torus_terms(f_.deriv_left(a, f), kinv, -inv, true);
    return r;
}

CoverElement CoverAlgebra::multiply(const Monomial& a, const Monomial& b) const {
    CoverElement r;
    for (const auto& [m, c] : straighten(a.e, b.f)) {
        Scalar coeff = c * torus_past_f(a.t, f_.weight(m.f)) * e_past_torus(f_.weight(m.e), b.t);
        r.add(Monomial{a.f + m.f, a.t * m.t * b.t, m.e + b.e}, coeff);
    }
    return r;
}

CoverElement CoverAlgebra::multiply(const CoverElement& x, const CoverElement& y) const {
    CoverElement r;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) r.add(multiply(a, b), ca * cb);
    }
    return r;
}

CoverElement CoverAlgebra::product(const std::vector<CoverElement>& xs) const {
    CoverElement r = one();
    for (const auto& x : xs) r = multiply(r, x);
    return r;
}

CoverElement CoverAlgebra::power(const CoverElement& x, long n) const {
    CoverElement r = one();
    for (long k = 0; k < n; ++k) r = multiply(r, x);
    return r;
}

bool CoverAlgebra::is_zero(const CoverElement& x) const {
    std::map<Torus, HalfTensor> groups;
    for (const auto& [m, c] : x) groups[m.t].add({m.f, m.e}, c);
    for (const auto& [t, g] : groups) {
        if (!f_.is_zero(g)) return false;
    }
    return true;
}

CoverElement CoverAlgebra::omega_monomial(const Monomial& m) const {
    // omega(E_i) = pi_i J~_i F_i, omega(F_i) = E_i, omega(K_mu) = K_{-mu}
    const Torus id = Torus::identity(rank());
    CoverElement r = multiply(Monomial{"", id, m.f}, Monomial{"", m.t.inverse(), ""});
    for (char a : m.e) r = multiply(r, multiply(Jtilde(a), F(a)) * f_.mono_i(a, 1, 0));
    return r;
}

CoverElement CoverAlgebra::sigma_monomial(const Monomial& m) const {
    // sigma(F_f T E_e) = sigma(E_e) sigma(T) sigma(F_f), order reversed
    FreeWord rev(m.e.rbegin(), m.e.rend());
    const Torus id = Torus::identity(rank());
    CoverElement r = multiply(Monomial{"", id, rev}, Monomial{"", m.t.inverse(), ""});
    for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
        const int a = *it;
        r = multiply(r, multiply(Jtilde(a), F(a)) * f_.mono_i(a, 1, 0));
    }
    return r;
}

CoverElement CoverAlgebra::omega(const CoverElement& x) const {
    CoverElement r;
    for (const auto& [m, c] : x) r.add(omega_monomial(m), c);
    return r;
}

CoverElement CoverAlgebra::sigma(const CoverElement& x) const {
    CoverElement r;
    for (const auto& [m, c] : x) r.add(sigma_monomial(m), c);
    return r;
}

CoverElement CoverAlgebra::bar(const CoverElement& x) const {
    // bar(K_mu) = J_mu K_{-mu}; words are fixed and coefficients are conjugated.
    CoverElement r;
    for (const auto& [m, c] : x) {
        Monomial n = m;
        for (int i = 0; i < rank(); ++i) {
            n.t.j[i] = mod2(m.t.j[i] + m.t.k[i]);
            n.t.k[i] = -m.t.k[i];
        }
        r.add(n, c.bar());
    }
    return r;
}

CoverTensor CoverAlgebra::tensor_multiply(const CoverTensor& a, const CoverTensor& b) const {
    CoverTensor r;
    for (const auto& [x, cx] : a) {
        for (const auto& [y, cy] : b) {
            Scalar sign = pi_pow(parity(y.first) * parity(x.second));
            CoverElement left = multiply(x.first, y.first);
            CoverElement right = multiply(x.second, y.second);
            for (const auto& [l, cl] : left) {
                for (const auto& [rr, cr] : right) r.add({l, rr}, cx * cy * sign * cl * cr);
            }
        }
    }
    return r;
}

CoverTensor CoverAlgebra::coproduct_monomial(const Monomial& m) const {
    const Torus id = Torus::identity(rank());
    const Monomial unit{"", id, ""};
    CoverTensor r({unit, unit});
    for (char a : m.f) {
        CoverTensor g;
        g.add({Monomial{letter(a), id, ""}, Monomial{"", tilde_torus(a, 0, -1), ""}}, 1);
        g.add({unit, Monomial{letter(a), id, ""}}, 1);
        r = tensor_multiply(r, g);
    }
    r = tensor_multiply(r, CoverTensor({Monomial{"", m.t, ""}, Monomial{"", m.t, ""}}));
    for (char a : m.e) {
        CoverTensor g;
        g.add({Monomial{"", id, letter(a)}, unit}, 1);
        g.add({Monomial{"", tilde_torus(a, 1, 1), ""}, Monomial{"", id, letter(a)}}, 1);
        r = tensor_multiply(r, g);
    }
    return r;
}

CoverTensor CoverAlgebra::coproduct(const CoverElement& x) const {
    CoverTensor r;
    for (const auto& [m, c] : x) r.add(coproduct_monomial(m), c);
    return r;
}

bool CoverAlgebra::is_zero(const CoverTensor& x) const {
    std::map<std::pair<Torus, Torus>, HalfMultiTensor> groups;
    for (const auto& [k, c] : x) {
        groups[{k.first.t, k.second.t}].add(std::vector<FreeWord>{k.first.f, k.first.e, k.second.f, k.second.e}, c);
    }
    for (const auto& [t, g] : groups) {
        if (!f_.is_zero(g)) return false;
    }
    return true;
}

CoverElement CoverAlgebra::higher_serre(SerreKind kind, int i, int j, long n, long m) const {
    const long pi = datum().parity(i);
    const long pj = datum().parity(j);
    const long aij = datum().a(i, j);
    CoverElement s;
    for (long r = 0; r <= m; ++r) {
        const long s_ = m - r;
        // p(n,r;i,j) = rn p(i)p(j) + binom(r,2) p(i), raised as a power of pi_i
        const long pexp = r * n * pi * pj + binom2(r) * pi;
        const long x = r * (n * aij + m - 1);
        // e and e' both carry (pi_i q_i)^{-x}, f and f' both carry q_i^{x}; this is the
        // assignment under which e' = sigma(e) and the braid table is invertible.
        Scalar c = Scalar(r % 2 == 0 ? 1 : -1) * f_.mono_i(i, pexp, 0);
        CoverElement t;
        switch (kind) {
            case SerreKind::E:
                c *= f_.mono_i(i, -x, -x);
                t = product({E(i, r), E(j, n), E(i, s_)});
                break;
            case SerreKind::EPrime:
                c *= f_.mono_i(i, -x, -x);
                t = product({E(i, s_), E(j, n), E(i, r)});
                break;
            case SerreKind::F:
                c *= f_.mono_i(i, 0, x);
                t = product({F(i, s_), F(j, n), F(i, r)});
                break;
            case SerreKind::FPrime:
                c *= f_.mono_i(i, 0, x);
                t = product({F(i, r), F(j, n), F(i, s_)});
                break;
        }
        s.add(t, c);
    }
    return s;
}

CoverElement CoverAlgebra::nu_bracket(int i, long n) const {
    const Scalar inv = (f_.mono_i(i, 1, 1) - f_.mono_i(i, 0, -1)).inverse();
    CoverElement r = torus(tilde_torus(i, 1, 1)) * (f_.mono_i(i, n, n) * inv);
    r.add(torus(tilde_torus(i, 0, -1)), -(f_.mono_i(i, 0, -n) * inv));
    return r;
}

CoverElement CoverAlgebra::nu_binomial(int i, long n, long t) const {
    CoverElement r = one();
    for (long s = 1; s <= t; ++s) r = multiply(r, nu_bracket(i, n + 1 - s));
    return r * f_.qfact_i(t, i).inverse();
}

std::string CoverAlgebra::monomial_to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    append_word(os, m.f, 'F', first);
    bool jz = true;
    bool kz = true;
    for (long x : m.t.j) jz = jz && x == 0;
    for (long x : m.t.k) kz = kz && x == 0;
    if (!jz) {
        if (!first) os << '*';
        first = false;
        os << 'J' << coweight_text(m.t.j);
    }
    if (!kz) {
        if (!first) os << '*';
        first = false;
        os << 'K' << coweight_text(m.t.k);
    }
    append_word(os, m.e, 'E', first);
    if (first) return "1";
    return os.str();
}

std::string CoverAlgebra::to_string(const CoverElement& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x) {
        const std::string mono = monomial_to_string(m);
        const bool unit_mono = mono == "1";
        if (c.is_one()) {
            if (!first) os << " + ";
            os << mono;
        } else if ((-c).is_one()) {
            os << (first ? "-" : " - ") << mono;
        } else {
            if (!first) os << " + ";
            os << '(' << c.to_string() << ')';
            if (!unit_mono) os << '*' << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qcov
