#include "qcov/half_algebra.hpp"

#include "qcov/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace qcov {

FreeWord letter(int i) { return FreeWord(1, static_cast<char>(i)); }

FreeWord word_from(const Word& w) {
    FreeWord s;
    s.reserve(w.size());
    for (int i : w) s.push_back(static_cast<char>(i));
    return s;
}

Word to_index_word(const FreeWord& w) {
    Word r;
    r.reserve(w.size());
    for (char c : w) r.push_back(static_cast<int>(c));
    return r;
}

HalfAlgebra::HalfAlgebra(CartanDatum datum) : datum_(std::move(datum)) {}

RootVec HalfAlgebra::weight(const FreeWord& w) const {
    RootVec nu(static_cast<std::size_t>(rank()), 0);
    for (char c : w) ++nu[static_cast<std::size_t>(c)];
    return nu;
}

int HalfAlgebra::parity(const FreeWord& w) const {
    int p = 0;
    for (char c : w) p ^= datum_.parity(c);
    return p;
}

RootVec HalfAlgebra::weight(const HalfElement& x) const {
    if (x.empty()) return datum_.zero_root();
    return weight(x.begin()->first);
}

HalfElement HalfAlgebra::divided_power(int i, long n) const {
    if (n < 0) return HalfElement();
    return HalfElement(FreeWord(static_cast<std::size_t>(n), static_cast<char>(i)), qfact_i(n, i).inverse());
}

HalfElement HalfAlgebra::multiply(const HalfElement& x, const HalfElement& y) {
    HalfElement r;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) r.add(a + b, ca * cb);
    }
    return r;
}

Scalar HalfAlgebra::twist(const FreeWord& x, int i) const {
    long pe = 0;
    long qe = 0;
    for (char c : x) {
        pe += datum_.parity(c) * datum_.parity(i);
        qe -= datum_.dot(c, i);
    }
    return Scalar::monomial(pe, qe);
}

HalfElement HalfAlgebra::deriv_left(int i, const FreeWord& w) const {
    HalfElement r;
    long pe = 0;
    long qe = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const int c = w[k];
        if (c == i) r.add(w.substr(0, k) + w.substr(k + 1), Scalar::monomial(pe, qe));
        pe += datum_.parity(c) * datum_.parity(i);
        qe -= datum_.dot(c, i);
    }
    return r;
}

HalfElement HalfAlgebra::deriv_right(int i, const FreeWord& w) const {
    HalfElement r;
    long pe = 0;
    long qe = 0;
    for (std::size_t k = w.size(); k-- > 0;) {
        const int c = w[k];
        if (c == i) r.add(w.substr(0, k) + w.substr(k + 1), Scalar::monomial(pe, qe));
        pe += datum_.parity(c) * datum_.parity(i);
        qe -= datum_.dot(c, i);
    }
    return r;
}

HalfElement HalfAlgebra::deriv_left(int i, const HalfElement& x) const {
    HalfElement r;
    for (const auto& [w, c] : x) r.add(deriv_left(i, w), c);
    return r;
}

HalfElement HalfAlgebra::deriv_right(int i, const HalfElement& x) const {
    HalfElement r;
    for (const auto& [w, c] : x) r.add(deriv_right(i, w), c);
    return r;
}

HalfTensor HalfAlgebra::coproduct(const FreeWord& w) const {
    // Each letter goes left or right; a letter sent left passes the letters
    // already sent right.
    struct Partial {
        FreeWord left, right;
        long pe, qe;
    };
    std::vector<Partial> cur{{"", "", 0, 0}};
    for (char c : w) {
        std::vector<Partial> next;
        next.reserve(cur.size() * 2);
        for (const auto& t : cur) {
            Partial l = t;
            for (char r : t.right) {
                l.pe += datum_.parity(c) * datum_.parity(r);
                l.qe -= datum_.dot(c, r);
            }
            l.left.push_back(c);
            next.push_back(std::move(l));
            Partial rr = t;
            rr.right.push_back(c);
            next.push_back(std::move(rr));
        }
        cur = std::move(next);
    }
    HalfTensor out;
    for (const auto& t : cur) out.add({t.left, t.right}, Scalar::monomial(t.pe, t.qe));
    return out;
}

HalfTensor HalfAlgebra::coproduct(const HalfElement& x) const {
    HalfTensor r;
    for (const auto& [w, c] : x) r.add(coproduct(w), c);
    return r;
}

HalfTensor HalfAlgebra::tensor_multiply(const HalfTensor& a, const HalfTensor& b) const {
    HalfTensor r;
    for (const auto& [k1, c1] : a) {
        const RootVec wy = weight(k1.second);
        const int py = parity(k1.second);
        for (const auto& [k2, c2] : b) {
            const long qe = -datum_.symmetric_form(weight(k2.first), wy);
            const long pe = static_cast<long>(parity(k2.first) * py);
            r.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2 * Scalar::monomial(pe, qe));
        }
    }
    return r;
}

Scalar HalfAlgebra::generator_norm(int i) const {
    return (Scalar(1) - mono_i(i, 1, 2)).inverse();
}

Scalar HalfAlgebra::weight_factor(const RootVec& nu) const {
    Scalar r(1);
    for (int i = 0; i < rank(); ++i) {
        if (nu[i] != 0) r *= generator_norm(i).pow(nu[i]);
    }
    return r;
}

Scalar HalfAlgebra::reduced_form(const FreeWord& a, const FreeWord& b) const {
    if (a.size() != b.size() || weight(a) != weight(b)) return Scalar();
    std::lock_guard<std::mutex> lock(mu_);
    return reduced_form_locked(a, b);
}

Scalar HalfAlgebra::reduced_form_locked(const FreeWord& a, const FreeWord& b) const {
    if (a.empty()) return Scalar(1);
    if (a.size() == 1) return Scalar(1);
    const FreeWord& lo = a < b ? a : b;
    const FreeWord& hi = a < b ? b : a;
    std::string key;
    key.reserve(lo.size() * 2 + 1);
    key.append(lo);
    key.push_back('\x7f');
    key.append(hi);
    auto it = form_memo_.find(key);
    if (it != form_memo_.end()) return it->second;
    // (theta_i x, y) = (theta_i, theta_i)(x, _i r(y))
    const int i = lo[0];
    const FreeWord rest = lo.substr(1);
    Scalar s;
    long pe = 0;
    long qe = 0;
    for (std::size_t k = 0; k < hi.size(); ++k) {
        const int c = hi[k];
        if (c == i) {
            Scalar sub = reduced_form_locked(rest, hi.substr(0, k) + hi.substr(k + 1));
            if (!sub.is_zero()) s += sub * Scalar::monomial(pe, qe);
        }
        pe += datum_.parity(c) * datum_.parity(i);
        qe -= datum_.dot(c, i);
    }
    form_memo_.emplace(std::move(key), s);
    return s;
}

Scalar HalfAlgebra::form(const FreeWord& a, const FreeWord& b) const {
    Scalar r = reduced_form(a, b);
    if (r.is_zero()) return r;
    return r * weight_factor(weight(a));
}

Scalar HalfAlgebra::form(const HalfElement& x, const HalfElement& y) const {
    Scalar s;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            Scalar f = form(a, b);
            if (!f.is_zero()) s += ca * cb * f;
        }
    }
    return s;
}

Scalar HalfAlgebra::tensor_form(const HalfTensor& x, const HalfTensor& y) const {
    Scalar s;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            Scalar f1 = form(a.first, b.first);
            if (f1.is_zero()) continue;
            Scalar f2 = form(a.second, b.second);
            if (!f2.is_zero()) s += ca * cb * f1 * f2;
        }
    }
    return s;
}

HalfElement HalfAlgebra::serre_element(int i, int j) const {
    const long b = datum_.b(i, j);
    const long pi = datum_.parity(i);
    const long pj = datum_.parity(j);
    HalfElement s;
    for (long k = 0; k <= b; ++k) {
        Scalar c = Scalar(k % 2 == 0 ? 1 : -1) * pi_pow(binom2(k) * pi + k * pi * pj);
        HalfElement t = multiply(multiply(divided_power(i, b - k), theta(j)), divided_power(i, k));
        s.add(t, c);
    }
    return s;
}

std::vector<FreeWord> HalfAlgebra::words_of_weight(const RootVec& nu) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = words_memo_.find(nu);
        if (it != words_memo_.end()) return it->second;
    }
    std::vector<FreeWord> out;
    bool negative = std::any_of(nu.begin(), nu.end(), [](long x) { return x < 0; });
    if (!negative) {
        FreeWord w;
        for (int i = 0; i < rank(); ++i) w.append(static_cast<std::size_t>(nu[i]), static_cast<char>(i));
        do {
            out.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    std::lock_guard<std::mutex> lock(mu_);
    words_memo_.emplace(nu, out);
    return out;
}

bool HalfAlgebra::is_zero(const HalfElement& x) const {
    std::map<RootVec, std::vector<std::pair<FreeWord, Scalar>>> by_weight;
    for (const auto& [w, c] : x) by_weight[weight(w)].emplace_back(w, c);
    for (const auto& [nu, terms] : by_weight) {
        for (const auto& probe : words_of_weight(nu)) {
            Scalar s;
            for (const auto& [w, c] : terms) {
                Scalar f = reduced_form(w, probe);
                if (!f.is_zero()) s += c * f;
            }
            if (!s.is_zero()) return false;
        }
    }
    return true;
}

bool HalfAlgebra::is_zero(const HalfTensor& x) const {
    // Group by the pair of weights, then pair the first factor against every
    // probe word and the resulting element against every second probe.
    std::map<std::pair<RootVec, RootVec>, std::vector<std::pair<const std::pair<FreeWord, FreeWord>*, Scalar>>> groups;
    for (const auto& [k, c] : x) groups[{weight(k.first), weight(k.second)}].emplace_back(&k, c);
    for (const auto& [wts, terms] : groups) {
        const auto probes1 = words_of_weight(wts.first);
        const auto probes2 = words_of_weight(wts.second);
        for (const auto& a : probes1) {
            HalfElement y;
            for (const auto& [k, c] : terms) {
                Scalar f = reduced_form(k->first, a);
                if (!f.is_zero()) y.add(k->second, c * f);
            }
            if (y.empty()) continue;
            for (const auto& b : probes2) {
                Scalar s;
                for (const auto& [w, c] : y) {
                    Scalar f = reduced_form(w, b);
                    if (!f.is_zero()) s += c * f;
                }
                if (!s.is_zero()) return false;
            }
        }
    }
    return true;
}

bool HalfAlgebra::is_zero(const HalfMultiTensor& x) const {
    if (x.empty()) return true;
    if (x.begin()->first.size() == 1) {
        HalfElement y;
        for (const auto& [k, c] : x) y.add(k[0], c);
        return is_zero(y);
    }
    // Contract the first factor against every probe word of its weight.
    std::map<RootVec, std::vector<std::pair<const std::vector<FreeWord>*, Scalar>>> groups;
    for (const auto& [k, c] : x) groups[weight(k[0])].emplace_back(&k, c);
    for (const auto& [nu, terms] : groups) {
        for (const auto& probe : words_of_weight(nu)) {
            HalfMultiTensor rest;
            for (const auto& [k, c] : terms) {
                Scalar f = reduced_form((*k)[0], probe);
                if (f.is_zero()) continue;
                rest.add(std::vector<FreeWord>(k->begin() + 1, k->end()), c * f);
            }
            if (!is_zero(rest)) return false;
        }
    }
    return true;
}

std::size_t HalfAlgebra::rank_of_weight(const RootVec& nu, int sign) const {
    const auto words = words_of_weight(nu);
    std::vector<std::vector<RatFun>> m(words.size(), std::vector<RatFun>(words.size()));
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a; b < words.size(); ++b) {
            m[a][b] = reduced_form(words[a], words[b]).specialize(sign);
            m[b][a] = m[a][b];
        }
    }
    return matrix_rank(std::move(m));
}

std::string HalfAlgebra::word_to_string(const FreeWord& w, const std::string& symbol) {
    if (w.empty()) return "1";
    std::ostringstream os;
    std::size_t k = 0;
    bool first = true;
    while (k < w.size()) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (!first) os << "*";
        first = false;
        os << symbol << "_" << static_cast<int>(w[k]) + 1;
        if (run > 1) os << "^" << run;
        k += run;
    }
    return os.str();
}

std::string HalfAlgebra::to_string(const HalfElement& x, const std::string& symbol) const {
    if (x.empty()) return "0";
    std::vector<std::pair<FreeWord, Scalar>> terms(x.begin(), x.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string ws = word_to_string(w, symbol);
        if (c.is_one()) {
            os << ws;
        } else if (w.empty()) {
            os << "(" << c.to_string() << ")";
        } else {
            os << "(" << c.to_string() << ")*" << ws;
        }
    }
    return os.str();
}

}  // namespace qcov
