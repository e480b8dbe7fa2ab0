#include "qcov/pbw.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qcov {

namespace {

HalfTensor outer(const HalfElement& a, const HalfElement& b) {
    HalfTensor r;
    for (const auto& [u, c] : a)
        for (const auto& [v, d] : b) r.add({u, v}, c * d);
    return r;
}

RootVec shifted(RootVec nu, int i, long t) {
    nu[i] -= t;
    return nu;
}

/// Columns of the reduced row echelon form that carry a pivot.
std::vector<std::size_t> pivot_columns(const RatMatrix& m, std::size_t cols) {
    std::vector<bool> free(cols, false);
    for (const auto& v : nullspace(m, cols)) {
        std::size_t last = 0;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) last = k;
        free[last] = true;
    }
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < cols; ++k)
        if (!free[k]) r.push_back(k);
    return r;
}

}  // namespace

PositivePart::PositivePart(const CoverAlgebra& u) : u_(u), t_(u) {}

JExponent PositivePart::add(const JExponent& a, const JExponent& b) const {
    JExponent r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = (a[k] + b[k]) % 2;
    return r;
}

U0JElement PositivePart::u0j_multiply(const U0JElement& a, const U0JElement& b) const {
    U0JElement r;
    for (const auto& [x, c] : a)
        for (const auto& [y, d] : b) r.add(add(x, y), c * d);
    return r;
}

std::vector<std::vector<int>> PositivePart::characters() const {
    std::vector<std::vector<int>> r{std::vector<int>(rank(), 1)};
    for (int k = 0; k < rank(); ++k) {
        if (u_.datum().pi_scale(k) == 0) continue;
        const std::size_t n = r.size();
        for (std::size_t a = 0; a < n; ++a) {
            auto chi = r[a];
            chi[k] = -1;
            r.push_back(std::move(chi));
        }
    }
    return r;
}

Scalar PositivePart::u0j_character(const U0JElement& a, const std::vector<int>& chi) const {
    Scalar s;
    for (const auto& [g, c] : a) {
        int v = 1;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g[k]) v *= chi[k];
        s += v > 0 ? c : -c;
    }
    return s;
}

bool PositivePart::u0j_is_unit(const U0JElement& a) const {
    for (const auto& chi : characters())
        if (!u0j_character(a, chi).is_unit()) return false;
    return true;
}

std::optional<U0JElement> PositivePart::u0j_inverse(const U0JElement& a) const {
    const auto chars = characters();
    std::vector<Scalar> values;
    for (const auto& chi : chars) {
        Scalar v = u0j_character(a, chi);
        if (!v.is_unit()) return std::nullopt;
        values.push_back(v.inverse());
    }
    // Fourier inversion over the characters of (Z/2)^odd
    const Scalar scale = Scalar(1) / Scalar(static_cast<long>(chars.size()));
    U0JElement r;
    for (const auto& g : chars) {
        JExponent e(rank(), 0);
        for (int k = 0; k < rank(); ++k) e[k] = g[k] < 0 ? 1 : 0;
        Scalar s;
        for (std::size_t c = 0; c < chars.size(); ++c) s += u0j_character(U0JElement(e), chars[c]) * values[c];
        r.add(e, s * scale);
    }
    return r;
}

UpJElement PositivePart::E(int i, long n) const { return from_half(half().divided_power(i, n)); }

UpJElement PositivePart::Jtilde(int i) const {
    JExponent e = zero_exponent();
    e[i] = static_cast<int>(u_.datum().pi_scale(i) % 2);
    return UpJElement({e, FreeWord()});
}

UpJElement PositivePart::from_half(const HalfElement& x, const JExponent& j) const {
    UpJElement r;
    for (const auto& [w, c] : x) r.add({j, w}, c);
    return r;
}

std::optional<UpJElement> PositivePart::from_cover(const CoverElement& x) const {
    UpJElement r;
    CoverElement rest;
    for (const auto& [m, c] : x) {
        bool ok = m.f.empty() && std::all_of(m.t.k.begin(), m.t.k.end(), [](long v) { return v == 0; });
        for (int k = 0; ok && k < rank(); ++k)
            if (m.t.j[k] != 0 && u_.datum().pi_scale(k) == 0) ok = false;
        if (ok) {
            JExponent e(rank());
            for (int k = 0; k < rank(); ++k) e[k] = static_cast<int>(m.t.j[k] % 2);
            r.add({e, m.e}, c);
        } else {
            rest.add(m, c);
        }
    }
    if (!rest.empty() && !u_.is_zero(rest)) return std::nullopt;
    return r;
}

UpJElement PositivePart::require(const CoverElement& x) const {
    auto r = from_cover(x);
    if (!r) throw NotInUpJ("element has a part outside the positive part: " + u_.to_string(x));
    return *r;
}

CoverElement PositivePart::to_cover(const UpJElement& x) const {
    CoverElement r;
    for (const auto& [k, c] : x) {
        Torus t = Torus::identity(rank());
        for (int a = 0; a < rank(); ++a) t.j[a] = k.first[a];
        r.add(Monomial{"", t, k.second}, c);
    }
    return r;
}

UpJElement PositivePart::multiply(const UpJElement& a, const UpJElement& b) const {
    // J~ commutes with every E_j
    UpJElement r;
    for (const auto& [x, c] : a)
        for (const auto& [y, d] : b) r.add({add(x.first, y.first), x.second + y.second}, c * d);
    return r;
}

UpJElement PositivePart::product(const std::vector<UpJElement>& xs) const {
    UpJElement r = one();
    for (const auto& x : xs) r = multiply(r, x);
    return r;
}

UpJElement PositivePart::scale(const U0JElement& a, const UpJElement& x) const {
    UpJElement r;
    for (const auto& [g, c] : a)
        for (const auto& [k, d] : x) r.add({add(g, k.first), k.second}, c * d);
    return r;
}

std::map<JExponent, HalfElement> PositivePart::components(const UpJElement& x) const {
    std::map<JExponent, HalfElement> r;
    for (const auto& [k, c] : x) r[k.first].add(k.second, c);
    return r;
}

HalfElement PositivePart::strip(const UpJElement& x) const {
    HalfElement r;
    for (const auto& [k, c] : x) r.add(k.second, c);
    return r;
}

std::vector<RootVec> PositivePart::weights(const UpJElement& x) const {
    std::set<RootVec> s;
    for (const auto& [k, c] : x) s.insert(half().weight(k.second));
    return {s.begin(), s.end()};
}

bool PositivePart::is_zero(const UpJElement& x) const {
    for (const auto& [g, h] : components(x))
        if (!half().is_zero(h)) return false;
    return true;
}

std::optional<UpJElement> PositivePart::try_braid_image(const BraidWord& w, const UpJElement& x) const {
    return from_cover(t_.apply(w, to_cover(x)));
}

UpJElement PositivePart::braid_image(const BraidWord& w, const UpJElement& x) const {
    return require(t_.apply(w, to_cover(x)));
}

U0JElement PositivePart::form(const UpJElement& x, const UpJElement& y) const {
    U0JElement r;
    const auto cx = components(x);
    const auto cy = components(y);
    for (const auto& [a, u] : cx)
        for (const auto& [b, v] : cy) r.add(add(a, b), half().form(u, v));
    return r;
}

UpJElement PositivePart::derivation(Derivation d, int i, const UpJElement& x) const {
    UpJElement r;
    for (const auto& [g, h] : components(x))
        r += from_half(d == Derivation::Left ? half().deriv_left(i, h) : half().deriv_right(i, h), g);
    return r;
}

bool PositivePart::in_subalgebra(const UpJElement& x, int i, Derivation d) const {
    return is_zero(derivation(d, i, x));
}

const std::vector<FreeWord>& PositivePart::weight_basis(const RootVec& nu) const {
    auto it = basis_memo_.find(nu);
    if (it != basis_memo_.end()) return it->second;
    const auto words = half().words_of_weight(nu);
    const std::size_t n = words.size();
    RatMatrix plus(n, std::vector<RatFun>(n)), minus(n, std::vector<RatFun>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // the form is symmetric, so row and column pivots agree
            const Scalar s = half().reduced_form(words[b], words[a]);
            plus[a][b] = s.specialize(1);
            minus[a][b] = s.specialize(-1);
        }
    auto piv = pivot_columns(plus, n);
    if (piv != pivot_columns(minus, n)) {
        // fall back to a greedy choice independent at both values of pi
        piv.clear();
        ScalarMatrix rows;
        std::size_t rk = 0;
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<Scalar> row(n);
            for (std::size_t b = 0; b < n; ++b) row[b] = half().reduced_form(words[a], words[b]);
            rows.push_back(row);
            if (matrix_rank(rows, 1) == rk + 1 && matrix_rank(rows, -1) == rk + 1) {
                piv.push_back(a);
                ++rk;
            } else {
                rows.pop_back();
            }
        }
        if (rk != half().rank_of_weight(nu, 1) || rk != half().rank_of_weight(nu, -1))
            throw std::logic_error("no word basis common to both values of pi");
    }
    std::vector<FreeWord> basis;
    for (std::size_t k : piv) basis.push_back(words[k]);
    return basis_memo_.emplace(nu, std::move(basis)).first->second;
}

const ScalarMatrix& PositivePart::gram_inverse(const RootVec& nu) const {
    auto it = gram_inverse_memo_.find(nu);
    if (it != gram_inverse_memo_.end()) return it->second;
    const auto& b = weight_basis(nu);
    ScalarMatrix g(b.size(), std::vector<Scalar>(b.size()));
    for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y) g[x][y] = half().form(b[x], b[y]);
    auto inv = inverse(g);
    if (!inv) throw std::logic_error("singular Gram matrix on a word basis");
    return gram_inverse_memo_.emplace(nu, std::move(*inv)).first->second;
}

std::vector<Scalar> PositivePart::coordinates(const HalfElement& x, const RootVec& nu) const {
    const auto& b = weight_basis(nu);
    const auto& inv = gram_inverse(nu);
    std::vector<Scalar> rhs(b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        for (const auto& [w, c] : x) rhs[k] += c * half().form(b[k], w);
    std::vector<Scalar> r(b.size());
    for (std::size_t a = 0; a < b.size(); ++a)
        for (std::size_t k = 0; k < b.size(); ++k) r[a] += inv[a][k] * rhs[k];
    return r;
}

const std::vector<HalfElement>& PositivePart::kernel_basis(const RootVec& nu, int i, Derivation d) const {
    const auto key = std::make_tuple(nu, i, d);
    auto it = kernel_memo_.find(key);
    if (it != kernel_memo_.end()) return it->second;
    const auto& b = weight_basis(nu);
    std::vector<HalfElement> r;
    if (nu[i] == 0) {
        for (const auto& w : b) r.emplace_back(w);
    } else {
        const auto& target = weight_basis(shifted(nu, i, 1));
        ScalarMatrix m(target.size(), std::vector<Scalar>(b.size()));
        for (std::size_t l = 0; l < b.size(); ++l) {
            const HalfElement img = d == Derivation::Left ? half().deriv_left(i, b[l]) : half().deriv_right(i, b[l]);
            for (std::size_t k = 0; k < target.size(); ++k) m[k][l] = half().form(HalfElement(target[k]), img);
        }
        auto ker = nullspace(m, b.size());
        if (!ker) throw std::logic_error("kernel dimension differs between the values of pi");
        for (const auto& v : *ker) {
            HalfElement x;
            for (std::size_t l = 0; l < b.size(); ++l) x.add(b[l], v[l]);
            r.push_back(std::move(x));
        }
    }
    return kernel_memo_.emplace(key, std::move(r)).first->second;
}

std::map<RootVec, HalfElement> PositivePart::split_weights(const HalfElement& x) const {
    std::map<RootVec, HalfElement> r;
    for (const auto& [w, c] : x) r[half().weight(w)].add(w, c);
    return r;
}

std::vector<std::pair<long, UpJElement>> PositivePart::i_decompose(const UpJElement& x, int i, Side side,
                                                                   Derivation d) const {
    std::map<long, UpJElement> parts;
    for (const auto& [g, comp] : components(x)) {
        for (const auto& [nu, h] : split_weights(comp)) {
            std::vector<std::pair<long, HalfElement>> cols;
            for (long t = 0; t <= nu[i]; ++t) {
                const HalfElement e = half().divided_power(i, t);
                for (const auto& k : kernel_basis(shifted(nu, i, t), i, d))
                    cols.emplace_back(t, side == Side::Left ? HalfAlgebra::multiply(e, k) : HalfAlgebra::multiply(k, e));
            }
            const std::size_t dim = weight_basis(nu).size();
            ScalarMatrix a(dim, std::vector<Scalar>(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const auto v = coordinates(cols[c].second, nu);
                for (std::size_t r = 0; r < dim; ++r) a[r][c] = v[r];
            }
            if (cols.size() != dim || matrix_rank(a, 1) != dim || matrix_rank(a, -1) != dim)
                throw std::logic_error("the decomposition along E_i is not direct in this weight");
            auto sol = solve(a, coordinates(h, nu));
            if (!sol) throw std::logic_error("the decomposition along E_i is not direct in this weight");
            std::size_t c = 0;
            for (long t = 0; t <= nu[i]; ++t)
                for (const auto& k : kernel_basis(shifted(nu, i, t), i, d)) parts[t] += from_half(k, g) * (*sol)[c++];
        }
    }
    std::vector<std::pair<long, UpJElement>> r;
    for (auto& [t, p] : parts)
        if (!p.empty()) r.emplace_back(t, std::move(p));
    return r;
}

HalfElement PositivePart::project(const HalfElement& x, int i, Side side, Derivation d) const {
    for (const auto& [t, p] : i_decompose(from_half(x), i, side, d))
        if (t == 0) return strip(p);
    return {};
}

UpJElement PositivePart::e_small(int i, int j, long m) const { return require(t_.e_small(i, j, m)); }

UpJElement PositivePart::e_small_prime(int i, int j, long m) const { return require(t_.e_small_prime(i, j, m)); }

bool PositivePart::coproduct_e_small_check(int i, int j, long m, bool prime) const {
    const HalfAlgebra& f = half();
    const long a = u_.datum().a(i, j);
    auto e = [&](long t) { return strip(prime ? e_small_prime(i, j, t) : e_small(i, j, t)); };
    const HalfElement top = e(m);
    HalfTensor rhs = prime ? outer(top, HalfAlgebra::one()) : outer(HalfAlgebra::one(), top);
    for (long t = 0; t <= m; ++t) {
        Scalar p(1);
        for (long h = 0; h <= m - t - 1; ++h) p *= Scalar(1) - f.mono_i(i, h + 1 - m, 2 * h + 2 - 2 * m - 2 * a);
        const Scalar c = f.mono_i(i, t * (m - t), -t * (m - t)) * p;
        const HalfElement d = f.divided_power(i, m - t);
        rhs += (prime ? outer(d, e(t)) : outer(e(t), d)) * c;
    }
    return f.is_zero(f.coproduct(top) - rhs);
}

bool PositivePart::is_admissible(const Word& h) const {
    const std::size_t n = h.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            BraidWord fwd;
            for (std::size_t k = a; k < b; ++k) fwd.push_back({h[k], 1});
            if (!try_braid_image(fwd, E(h[b]))) return false;
            BraidWord back;
            for (std::size_t k = b; k > a; --k) back.push_back({h[k], -1});
            if (!try_braid_image(back, E(h[a]))) return false;
        }
    }
    return true;
}

bool PositivePart::is_adapted(const Word& h, std::size_t p, const UpJElement& x) const {
    if (p > h.size()) return false;
    for (std::size_t a = 0; a < p; ++a) {
        BraidWord w;
        for (std::size_t k = a; k < p; ++k) w.push_back({h[k], 1});
        if (!try_braid_image(w, x)) return false;
    }
    for (std::size_t b = p + 1; b <= h.size(); ++b) {
        BraidWord w;
        for (std::size_t k = b; k > p; --k) w.push_back({h[k - 1], -1});
        if (!try_braid_image(w, x)) return false;
    }
    return true;
}

const UpJElement& PositivePart::root_vector(const BraidWord& prefix, int i, long c) const {
    std::vector<std::pair<int, int>> key;
    for (const auto& l : prefix) key.emplace_back(l.index, l.sign);
    const auto k = std::make_tuple(key, i, c);
    auto it = root_memo_.find(k);
    if (it != root_memo_.end()) return it->second;
    UpJElement r;
    if (c <= 1) {
        r = braid_image(prefix, E(i, c));
    } else {
        // T is an algebra map, so T(E_i^(c)) = T(E_i)^c / [c]_i!
        const UpJElement& base = root_vector(prefix, i, 1);
        r = one();
        for (long k = 0; k < c; ++k) r = multiply(r, base);
        r *= half().qfact_i(c, i).inverse();
    }
    return root_memo_.emplace(k, std::move(r)).first->second;
}

UpJElement PositivePart::L_element(const Word& h, const std::vector<long>& c, std::size_t p, const UpJElement& x) const {
    if (c.size() != h.size()) throw std::invalid_argument("exponent vector and sequence differ in length");
    if (!is_adapted(h, p, x)) throw NotAdapted("element is not adapted to the sequence at this position");
    std::vector<UpJElement> factors;
    for (std::size_t k = p; k < h.size(); ++k) {
        BraidWord w;
        for (std::size_t l = p; l < k; ++l) w.push_back({h[l], 1});
        factors.push_back(root_vector(w, h[k], c[k]));
    }
    factors.push_back(x);
    for (std::size_t k = 0; k < p; ++k) {
        BraidWord w;
        for (std::size_t l = p; l > k + 1; --l) w.push_back({h[l - 1], -1});
        factors.push_back(root_vector(w, h[k], c[k]));
    }
    return product(factors);
}

UpJElement PositivePart::pbw_monomial(const Word& h, const std::vector<long>& c, int sign) const {
    if (c.size() != h.size()) throw std::invalid_argument("exponent vector and sequence differ in length");
    std::vector<UpJElement> factors;
    BraidWord prefix;
    for (std::size_t k = 0; k < h.size(); ++k) {
        factors.push_back(root_vector(prefix, h[k], c[k]));
        prefix.push_back({h[k], sign});
    }
    if (sign < 0) std::reverse(factors.begin(), factors.end());
    return product(factors);
}

void PositivePart::check_word(const Word& h) const {
    const CartanDatum& d = u_.datum();
    if (!d.is_finite_type()) throw NotFiniteType("PBW bases are built for finite type only");
    for (int i : h)
        if (i < 0 || i >= rank()) throw std::invalid_argument("index out of range in word");
    if (!d.word_is_reduced(h)) throw NotReduced("word is not reduced");
}

namespace {

void enumerate(const std::vector<long>& cost, long budget, std::vector<long>& c, std::size_t k,
               const std::function<void(const std::vector<long>&)>& emit) {
    if (k == cost.size()) {
        emit(c);
        return;
    }
    for (long v = 0; v * cost[k] <= budget; ++v) {
        c[k] = v;
        enumerate(cost, budget - v * cost[k], c, k + 1, emit);
    }
    c[k] = 0;
}

}  // namespace

std::vector<PbwMonomial> PositivePart::pbw_basis(const Word& h, long max_height, int sign) const {
    check_word(h);
    const CartanDatum& d = u_.datum();
    std::vector<RootVec> roots;
    std::vector<long> cost;
    Word prefix;
    for (int i : h) {
        roots.push_back(d.apply_word_root(prefix, d.simple_root(i)));
        cost.push_back(d.height(roots.back()));
        prefix.push_back(i);
    }
    std::vector<PbwMonomial> r;
    std::vector<long> c(h.size(), 0);
    enumerate(cost, max_height, c, 0, [&](const std::vector<long>& cv) {
        RootVec nu(rank(), 0);
        for (std::size_t k = 0; k < cv.size(); ++k)
            for (int a = 0; a < rank(); ++a) nu[a] += cv[k] * roots[k][a];
        r.push_back({h, cv, sign, nu, pbw_monomial(h, cv, sign)});
    });
    return r;
}

std::vector<PbwMonomial> PositivePart::pbw_by_degree(const Word& h, long degree, int sign) const {
    check_word(h);
    std::vector<PbwMonomial> r;
    std::vector<long> c(h.size(), 0);
    std::vector<long> unit(h.size(), 1);
    enumerate(unit, degree, c, 0, [&](const std::vector<long>& cv) {
        UpJElement x = pbw_monomial(h, cv, sign);
        RootVec nu = rank() > 0 ? half().weight(x.begin()->first.second) : RootVec{};
        r.push_back({h, cv, sign, nu, std::move(x)});
    });
    return r;
}

GramCertificate PositivePart::gram_certificate(const std::vector<PbwMonomial>& basis, bool complete_weights) const {
    GramCertificate g;
    g.size = basis.size();
    g.pi_exponents.assign(basis.size(), -1);
    std::map<RootVec, std::vector<std::size_t>> by_weight;
    for (std::size_t k = 0; k < basis.size(); ++k) by_weight[basis[k].weight].push_back(k);
    for (const auto& [nu, ids] : by_weight) {
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                if (!form(basis[ids[a]].element, basis[ids[b]].element).empty()) g.orthogonal = false;
            const PbwMonomial& m = basis[ids[a]];
            const U0JElement norm = form(m.element, m.element);
            if (!u0j_is_unit(norm)) g.units = false;
            Scalar expected(1);
            for (std::size_t s = 0; s < m.word.size(); ++s) {
                const HalfElement e = half().divided_power(m.word[s], m.c[s]);
                expected *= half().form(e, e);
            }
            for (int l : {0, 1}) {
                if (norm == U0JElement(zero_exponent(), expected * Scalar::pi_power(l))) {
                    g.pi_exponents[ids[a]] = l;
                    break;
                }
            }
            if (g.pi_exponents[ids[a]] < 0) g.norms_match = false;
        }
        if (!complete_weights) continue;
        const std::size_t dim = half().rank_of_weight(nu, 1);
        g.counts[nu] = {ids.size(), dim};
        if (ids.size() != dim || dim != half().rank_of_weight(nu, -1)) g.spans = false;
    }
    return g;
}

std::map<std::size_t, U0JElement> PositivePart::pbw_coordinates(const UpJElement& x,
                                                                 const std::vector<PbwMonomial>& basis) const {
    std::map<std::size_t, U0JElement> r;
    UpJElement rebuilt;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const U0JElement p = form(x, basis[k].element);
        if (p.empty()) continue;
        auto inv = u0j_inverse(form(basis[k].element, basis[k].element));
        if (!inv) throw SingularNorm("norm of a PBW monomial is a zero divisor");
        U0JElement c = u0j_multiply(p, *inv);
        rebuilt += scale(c, basis[k].element);
        r.emplace(k, std::move(c));
    }
    if (!is_zero(rebuilt - x)) throw std::invalid_argument("element is not in the span of the given monomials");
    return r;
}

PositivePart::TensorTerms PositivePart::expand(const HalfTensor& x, bool right) const {
    std::map<std::pair<RootVec, RootVec>, HalfTensor> blocks;
    for (const auto& [k, c] : x) blocks[{half().weight(k.first), half().weight(k.second)}].add(k, c);
    TensorTerms r;
    for (const auto& [nu, t] : blocks) {
        const auto& b1 = weight_basis(nu.first);
        const auto& b2 = weight_basis(nu.second);
        ScalarMatrix p(b1.size(), std::vector<Scalar>(b2.size()));
        for (const auto& [k, c] : t)
            for (std::size_t l = 0; l < b1.size(); ++l) {
                const Scalar s = c * half().form(b1[l], k.first);
                if (s.is_zero()) continue;
                for (std::size_t m = 0; m < b2.size(); ++m) p[l][m] += s * half().form(b2[m], k.second);
            }
        const ScalarMatrix coeff = qcov::multiply(qcov::multiply(gram_inverse(nu.first), p), gram_inverse(nu.second));
        if (right) {
            for (std::size_t m = 0; m < b2.size(); ++m) {
                HalfElement y;
                for (std::size_t l = 0; l < b1.size(); ++l) y.add(b1[l], coeff[l][m]);
                if (!y.empty()) r.emplace_back(std::move(y), HalfElement(b2[m]));
            }
        } else {
            for (std::size_t l = 0; l < b1.size(); ++l) {
                HalfElement y;
                for (std::size_t m = 0; m < b2.size(); ++m) y.add(b2[m], coeff[l][m]);
                if (!y.empty()) r.emplace_back(HalfElement(b1[l]), std::move(y));
            }
        }
    }
    return r;
}

HalfTensor PositivePart::rprime(const HalfElement& x, int i) const {
    HalfTensor r;
    for (const auto& [a, b] : expand(half().coproduct(x), true)) r += outer(a, project(b, i, Side::Right, Derivation::Left));
    return r;
}

HalfTensor PositivePart::rdoubleprime(const HalfElement& y, int i) const {
    HalfTensor r;
    for (const auto& [a, b] : expand(half().coproduct(y), false)) r += outer(project(a, i, Side::Left, Derivation::Right), b);
    return r;
}

bool PositivePart::rprime_compatible(const HalfElement& x, int i) const {
    const BraidWord inv{{i, -1}};
    auto image = [&](const HalfElement& z) -> std::optional<HalfElement> {
        auto r = try_braid_image(inv, from_half(z));
        if (!r) return std::nullopt;
        return strip(*r);
    };
    HalfTensor lhs;
    for (const auto& [a, b] : expand(half().coproduct(x), true)) {
        const HalfElement pb = project(b, i, Side::Right, Derivation::Left);
        if (pb.empty()) continue;
        auto ta = image(a);
        auto tb = image(pb);
        if (!ta || !tb) return false;
        lhs += outer(*ta, *tb);
    }
    auto y = image(x);
    if (!y) return false;
    return half().is_zero(lhs - rdoubleprime(*y, i));
}

}  // namespace qcov
