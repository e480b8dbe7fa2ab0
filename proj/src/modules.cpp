#include "qcov/modules.hpp"

#include <algorithm>
#include <sstream>

namespace qcov {

namespace {

Scalar qint_at(const CartanDatum& c, int i, long n) { return qint(n, c.d(i), c.pi_scale(i)); }

/// pi_i^a q_i^b
Scalar mono_at(const CartanDatum& c, int i, long a, long b) { return Scalar::monomial(a * c.pi_scale(i), b * c.d(i)); }

Scalar sign_power(long n) { return Scalar(n % 2 == 0 ? 1 : -1); }

Torus jtilde_power(const CartanDatum& c, int i, long n) {
    Torus t = Torus::identity(c.rank());
    t.j[i] = ((n * c.pi_scale(i)) % 2 + 2) % 2;
    return t;
}

Weight shift_weight(const CartanDatum& c, const Weight& mu, const RootVec& nu, long sign) {
    Weight w = c.root_to_weight(nu);
    Weight r = mu;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += sign * w[k];
    return r;
}

ScalarMatrix principal(const ScalarMatrix& g, const std::vector<std::size_t>& idx) {
    ScalarMatrix r(idx.size(), std::vector<Scalar>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) r[a][b] = g[idx[a]][idx[b]];
    return r;
}

}  // namespace

std::size_t WeightModule::add_basis(ModuleBasis b) {
    const std::size_t k = basis_.size();
    weights_[b.weight].push_back(k);
    basis_.push_back(std::move(b));
    for (auto& row : e_) row.emplace_back();
    for (auto& row : f_) row.emplace_back();
    return k;
}

WeightModule WeightModule::simple(const CartanDatum& c, const Weight& lambda) {
    const int n = c.rank();
    if (static_cast<int>(lambda.size()) != n) throw NotDominant("highest weight has the wrong length");
    for (long x : lambda)
        if (x < 0) throw NotDominant("highest weight is not dominant");
    if (!c.is_finite_type()) throw NotFiniteType("simple modules are built for finite type only");

    WeightModule m(c);
    m.simple_ = true;
    m.lambda_ = lambda;
    m.e_.assign(n, {});
    m.f_.assign(n, {});
    const std::size_t top = m.add_basis({lambda, 0, "", 0, 0});
    m.gram_[lambda] = {{Scalar(1)}};

    // Basis vectors of each weight space, keyed by the depth nu (weight lambda - nu).
    std::map<RootVec, std::vector<std::size_t>> level{{c.zero_root(), {top}}};
    std::vector<std::size_t> local(1, 0);

    while (!level.empty()) {
        std::map<RootVec, std::vector<std::pair<int, std::size_t>>> candidates;
        for (const auto& [nu, idx] : level) {
            for (int j = 0; j < n; ++j) {
                RootVec next = nu;
                ++next[j];
                for (std::size_t b : idx) candidates[next].emplace_back(j, b);
            }
        }
        std::map<RootVec, std::vector<std::size_t>> next_level;
        for (auto& [nu, cand] : candidates) {
            std::sort(cand.begin(), cand.end(), [&](const auto& x, const auto& y) {
                return letter(x.first) + m.basis_[x.second].word < letter(y.first) + m.basis_[y.second].word;
            });
            const std::size_t nc = cand.size();
            // E_i (F_j b) = pi^{p(i)p(j)} F_j (E_i b) + delta_ij [<i, wt b>]_i b
            std::vector<std::vector<ModuleVector>> eimg(nc, std::vector<ModuleVector>(n));
            for (std::size_t a = 0; a < nc; ++a) {
                const auto [j, b] = cand[a];
                for (int i = 0; i < n; ++i) {
                    ModuleVector v = m.F(j, m.e_[i][b]) * pi_pow(c.parity(i) * c.parity(j));
                    if (i == j) v.add(b, qint_at(c, i, m.basis_[b].weight[i]));
                    eimg[a][i] = std::move(v);
                }
            }
            // <F_j F_b eta, v> = <F_b eta, E_j v>
            ScalarMatrix g(nc, std::vector<Scalar>(nc));
            for (std::size_t a = 0; a < nc; ++a) {
                const auto [j, b] = cand[a];
                const ScalarMatrix& lower = m.gram_.at(m.basis_[b].weight);
                for (std::size_t col = 0; col < nc; ++col) {
                    Scalar s;
                    for (const auto& [k, x] : eimg[col][j]) s += x * lower[local[b]][local[k]];
                    g[a][col] = s;
                }
            }
            const std::size_t rank = matrix_rank(g, 1);
            if (matrix_rank(g, -1) != rank) throw std::logic_error("weight space is not pi-free");
            if (rank == 0) continue;
            std::vector<std::size_t> chosen;
            for (std::size_t a = 0; a < nc && chosen.size() < rank; ++a) {
                chosen.push_back(a);
                if (!inverse(principal(g, chosen))) chosen.pop_back();
            }
            if (chosen.size() != rank) throw std::logic_error("no invertible principal minor in the contravariant form");

            const Weight mu = shift_weight(c, lambda, nu, -1);
            std::vector<std::size_t> ids;
            for (std::size_t a : chosen) {
                const auto [j, b] = cand[a];
                const std::size_t k = m.add_basis({mu, (m.basis_[b].parity + c.parity(j)) % 2,
                                                   letter(j) + m.basis_[b].word, 0, 0});
                local.push_back(ids.size());
                ids.push_back(k);
                for (int i = 0; i < n; ++i) m.e_[i][k] = eimg[a][i];
            }
            m.gram_[mu] = principal(g, chosen);
            for (std::size_t a = 0; a < nc; ++a) {
                std::vector<Scalar> rhs(chosen.size());
                for (std::size_t r = 0; r < chosen.size(); ++r) rhs[r] = g[chosen[r]][a];
                auto x = solve(m.gram_[mu], rhs);
                if (!x) throw std::logic_error("candidate vector outside the span of the basis");
                ModuleVector v;
                for (std::size_t r = 0; r < chosen.size(); ++r) v.add(ids[r], (*x)[r]);
                const auto [j, b] = cand[a];
                m.f_[j][b] = std::move(v);
            }
            next_level[nu] = std::move(ids);
        }
        level = std::move(next_level);
    }
    return m;
}

WeightModule WeightModule::tensor(const CoverAlgebra& u, const WeightModule& a, const WeightModule& b) {
    const CartanDatum& c = a.datum();
    const int n = c.rank();
    WeightModule m(c);
    m.e_.assign(n, {});
    m.f_.assign(n, {});
    m.left_ = std::make_shared<const WeightModule>(a);
    m.right_ = std::make_shared<const WeightModule>(b);
    for (std::size_t x = 0; x < a.dim(); ++x) {
        for (std::size_t y = 0; y < b.dim(); ++y) {
            Weight w = a.basis(x).weight;
            for (int k = 0; k < n; ++k) w[k] += b.basis(y).weight[k];
            m.add_basis({w, (a.basis(x).parity + b.basis(y).parity) % 2, "", x, y});
        }
    }
    for (int i = 0; i < n; ++i) {
        const CoverTensor de = u.coproduct(u.E(i));
        const CoverTensor df = u.coproduct(u.F(i));
        for (std::size_t k = 0; k < m.dim(); ++k) {
            m.e_[i][k] = m.act(u, de, ModuleVector(k));
            m.f_[i][k] = m.act(u, df, ModuleVector(k));
        }
    }
    return m;
}

std::size_t WeightModule::dim(const Weight& mu) const {
    auto it = weights_.find(mu);
    return it == weights_.end() ? 0 : it->second.size();
}

const ScalarMatrix& WeightModule::gram(const Weight& mu) const {
    auto it = gram_.find(mu);
    if (it == gram_.end()) throw std::out_of_range("no contravariant form stored for this weight");
    return it->second;
}

ModuleVector WeightModule::from_word(const FreeWord& w) const {
    ModuleVector v = highest_vector();
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = F(*it, v);
    return v;
}

ModuleVector WeightModule::apply(const std::vector<std::vector<ModuleVector>>& mat, int i,
                                 const ModuleVector& v) const {
    ModuleVector r;
    for (const auto& [k, c] : v) r.add(mat[i][k], c);
    return r;
}

ModuleVector WeightModule::E(int i, const ModuleVector& v) const { return apply(e_, i, v); }
ModuleVector WeightModule::F(int i, const ModuleVector& v) const { return apply(f_, i, v); }

ModuleVector WeightModule::E(int i, long n, const ModuleVector& v) const {
    if (n < 0) return {};
    ModuleVector r = v;
    for (long k = 0; k < n && !r.empty(); ++k) r = E(i, r);
    return r * qfact(n, datum_.d(i), datum_.pi_scale(i)).inverse();
}

ModuleVector WeightModule::F(int i, long n, const ModuleVector& v) const {
    if (n < 0) return {};
    ModuleVector r = v;
    for (long k = 0; k < n && !r.empty(); ++k) r = F(i, r);
    return r * qfact(n, datum_.d(i), datum_.pi_scale(i)).inverse();
}

Scalar WeightModule::torus_value(const Torus& t, const Weight& mu) const {
    return Scalar::monomial(CartanDatum::pair_coweight_weight(t.j, mu), CartanDatum::pair_coweight_weight(t.k, mu));
}

ModuleVector WeightModule::torus(const Torus& t, const ModuleVector& v) const {
    ModuleVector r;
    for (const auto& [k, c] : v) r.add(k, c * torus_value(t, basis_[k].weight));
    return r;
}

ModuleVector WeightModule::act(const CoverElement& x, const ModuleVector& v) const {
    ModuleVector r;
    for (const auto& [mono, c] : x) {
        ModuleVector w = v;
        for (auto it = mono.e.rbegin(); it != mono.e.rend() && !w.empty(); ++it) w = E(*it, w);
        w = torus(mono.t, w);
        for (auto it = mono.f.rbegin(); it != mono.f.rend() && !w.empty(); ++it) w = F(*it, w);
        r.add(w, c);
    }
    return r;
}

ModuleVector WeightModule::act(const CoverAlgebra& u, const CoverTensor& x, const ModuleVector& v) const {
    if (!is_tensor()) throw std::logic_error("tensor action on a module that is not a tensor product");
    ModuleVector r;
    for (const auto& [k, c] : v) {
        const std::size_t lx = basis_[k].left;
        const std::size_t ry = basis_[k].right;
        const int px = left_->basis(lx).parity;
        for (const auto& [pair, coeff] : x) {
            ModuleVector a = left_->act(CoverElement(pair.first), ModuleVector(lx));
            if (a.empty()) continue;
            ModuleVector b = right_->act(CoverElement(pair.second), ModuleVector(ry));
            if (b.empty()) continue;
            const Scalar s = c * coeff * pi_pow(u.parity(pair.second) * px);
            for (const auto& [ka, ca] : a)
                for (const auto& [kb, cb] : b) r.add(pair_index(ka, kb), s * ca * cb);
        }
    }
    return r;
}

ModuleVector WeightModule::bar(const ModuleVector& v) const {
    if (!simple_) throw std::logic_error("bar is only fixed on simple modules");
    return v.map_coefficients([](const Scalar& s) { return s.bar(); });
}

std::map<Weight, ModuleVector> WeightModule::split(const ModuleVector& v) const {
    std::map<Weight, ModuleVector> r;
    for (const auto& [k, c] : v) r[basis_[k].weight].add(k, c);
    return r;
}

std::string WeightModule::to_string(const ModuleVector& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*";
        if (simple_) {
            os << "F[" << HalfAlgebra::word_to_string(basis_[k].word, "F") << "]";
        } else if (is_tensor()) {
            os << "v" << basis_[k].left << "(x)v" << basis_[k].right;
        } else {
            os << "v" << k;
        }
    }
    return os.str();
}

ModuleVector module_braid(const WeightModule& m, int i, int sign, const ModuleVector& v) {
    const CartanDatum& c = m.datum();
    ModuleVector r;
    for (const auto& [mu, z] : m.split(v)) {
        const long n = mu[i];
        if (sign > 0) {
            // sum over a - b + c = n of (-1)^b pi_i^c q_i^{-ac+b} J~_i^c F^(a) E^(b) F^(c) z
            ModuleVector fc = z;
            for (long cc = 0; !fc.empty(); ++cc) {
                ModuleVector eb = fc;
                for (long b = 0; !eb.empty(); ++b) {
                    const long a = n + b - cc;
                    if (a >= 0) {
                        ModuleVector w = m.torus(jtilde_power(c, i, cc), m.F(i, a, eb));
                        r.add(w, sign_power(b) * mono_at(c, i, cc, -a * cc + b));
                    }
                    eb = m.E(i, eb) * qint_at(c, i, b + 1).inverse();
                }
                fc = m.F(i, fc) * qint_at(c, i, cc + 1).inverse();
            }
        } else {
            // sum over -a + b - c = n of (-1)^b pi_i^{ac+c+binom(n,2)} q_i^{ac-b} J~_i^a E^(a) F^(b) E^(c) z
            ModuleVector ec = z;
            for (long cc = 0; !ec.empty(); ++cc) {
                ModuleVector fb = ec;
                for (long b = 0; !fb.empty(); ++b) {
                    const long a = b - cc - n;
                    if (a >= 0) {
                        ModuleVector w = m.torus(jtilde_power(c, i, a), m.E(i, a, fb));
                        r.add(w, sign_power(b) * mono_at(c, i, a * cc + cc + binom2(n), a * cc - b));
                    }
                    fb = m.F(i, fb) * qint_at(c, i, b + 1).inverse();
                }
                ec = m.E(i, ec) * qint_at(c, i, cc + 1).inverse();
            }
        }
    }
    return r;
}

ModuleVector module_braid(const WeightModule& m, const BraidWord& w, const ModuleVector& v) {
    ModuleVector r = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = module_braid(m, it->index, it->sign, r);
    return r;
}

StringDecomposition::StringDecomposition(const WeightModule& m, int i) : m_(m), i_(i) {
    const CartanDatum& c = m.datum();
    for (const auto& [mu, idx] : m.weights()) {
        if (mu[i] < 0) continue;
        Weight up = shift_weight(c, mu, c.simple_root(i), 1);
        auto it = m.weights().find(up);
        if (it == m.weights().end()) {
            for (std::size_t k : idx) {
                tops_.push_back(ModuleVector(k));
                top_weight_.push_back(mu[i]);
            }
            continue;
        }
        const auto& target = it->second;
        ScalarMatrix a(target.size(), std::vector<Scalar>(idx.size()));
        for (std::size_t col = 0; col < idx.size(); ++col) {
            ModuleVector img = m.E(i, ModuleVector(idx[col]));
            for (std::size_t row = 0; row < target.size(); ++row) a[row][col] = img.coeff(target[row]);
        }
        auto ker = nullspace(a, idx.size());
        if (!ker) throw std::logic_error("highest vectors are not pi-free");
        for (const auto& vec : *ker) {
            ModuleVector v;
            for (std::size_t col = 0; col < idx.size(); ++col) v.add(idx[col], vec[col]);
            tops_.push_back(std::move(v));
            top_weight_.push_back(mu[i]);
        }
    }
    // Each weight space is spanned by the F_i^(k) eta_s that land in it.
    std::map<Weight, std::vector<std::pair<std::pair<std::size_t, long>, ModuleVector>>> cols;
    for (std::size_t s = 0; s < tops_.size(); ++s) {
        ModuleVector v = tops_[s];
        for (long k = 0; k <= top_weight_[s]; ++k) {
            if (k > 0) v = m.F(i, v) * qint_at(c, i, k).inverse();
            const Weight& mu = m.basis(v.begin()->first).weight;
            cols[mu].push_back({{s, k}, v});
        }
    }
    for (const auto& [mu, list] : cols) {
        const auto& idx = m.weights().at(mu);
        if (list.size() != idx.size()) throw std::logic_error("strings do not span the weight space");
        ScalarMatrix a(idx.size(), std::vector<Scalar>(idx.size()));
        Block blk;
        for (std::size_t col = 0; col < list.size(); ++col) {
            blk.labels.push_back(list[col].first);
            for (std::size_t row = 0; row < idx.size(); ++row) a[row][col] = list[col].second.coeff(idx[row]);
        }
        auto inv = inverse(a);
        if (!inv) throw std::logic_error("strings are not independent");
        blk.inverse = std::move(*inv);
        blocks_.emplace(mu, std::move(blk));
    }
}

std::map<std::pair<std::size_t, long>, Scalar> StringDecomposition::coordinates(const ModuleVector& v) const {
    std::map<std::pair<std::size_t, long>, Scalar> out;
    for (const auto& [mu, z] : m_.split(v)) {
        const auto& idx = m_.weights().at(mu);
        const Block& blk = blocks_.at(mu);
        for (std::size_t r = 0; r < blk.labels.size(); ++r) {
            Scalar s;
            for (std::size_t col = 0; col < idx.size(); ++col) s += blk.inverse[r][col] * z.coeff(idx[col]);
            if (!s.is_zero()) out[blk.labels[r]] += s;
        }
    }
    return out;
}

ModuleVector StringDecomposition::omega(const ModuleVector& v) const {
    const CartanDatum& c = m_.datum();
    ModuleVector r;
    for (const auto& [label, coeff] : coordinates(v)) {
        const auto [s, k] = label;
        const long top = top_weight_[s];
        // omega(F^(k) eta) = E^(k) omega(eta) = pi_i^{binom(m,2)} E^(k) xi, xi = F^(m) eta
        ModuleVector xi = m_.F(i_, top, tops_[s]);
        r.add(m_.E(i_, k, xi), coeff * mono_at(c, i_, binom2(top), 0));
    }
    return r;
}

ModuleVector StringDecomposition::omega_inverse(const ModuleVector& v) const { return omega(omega(omega(v))); }

ModuleVector quasi_r(const WeightModule& t, int i, int sign, const ModuleVector& z) {
    const CartanDatum& c = t.datum();
    const WeightModule& a = t.left();
    const WeightModule& b = t.right();
    const Scalar gap = mono_at(c, i, 1, 1) - mono_at(c, i, 0, -1);
    ModuleVector r;
    for (const auto& [k, coeff] : z) {
        const ModuleVector x(t.basis(k).left);
        const ModuleVector y(t.basis(k).right);
        const long px = a.basis(t.basis(k).left).parity;
        for (long n = 0;; ++n) {
            ModuleVector fx = a.F(i, n, x);
            ModuleVector ey = b.E(i, n, y);
            if (fx.empty() || ey.empty()) break;
            // E_i^(n) passes x with pi_i^{n p(x)}
            Scalar s = mono_at(c, i, n * px, 0) * gap.pow(n) * qfact(n, c.d(i), c.pi_scale(i));
            s *= sign > 0 ? mono_at(c, i, 0, binom2(n)) : sign_power(n) * mono_at(c, i, binom2(n), -binom2(n));
            for (const auto& [ka, ca] : fx)
                for (const auto& [kb, cb] : ey) r.add(t.pair_index(ka, kb), coeff * s * ca * cb);
        }
    }
    return r;
}

ModuleVector tensor_braid(const WeightModule& t, int i, int sign, const ModuleVector& z) {
    const CartanDatum& c = t.datum();
    ModuleVector r;
    for (const auto& [k, coeff] : z) {
        const std::size_t x = t.basis(k).left;
        const std::size_t y = t.basis(k).right;
        const long s = t.right().basis(y).weight[i];
        const Scalar tw = coeff * mono_at(c, i, s * t.left().basis(x).parity, 0);
        ModuleVector tx = module_braid(t.left(), i, sign, ModuleVector(x));
        ModuleVector ty = module_braid(t.right(), i, sign, ModuleVector(y));
        for (const auto& [ka, ca] : tx)
            for (const auto& [kb, cb] : ty) r.add(t.pair_index(ka, kb), tw * ca * cb);
    }
    return r;
}

HalfElement verma_act(const CoverAlgebra& u, const CoverElement& x, const HalfElement& v, const Weight& lambda) {
    HalfElement r;
    for (const auto& [m, c] : u.multiply(x, u.minus(v))) {
        if (!m.e.empty()) continue;
        r.add(m.f, c * Scalar::monomial(CartanDatum::pair_coweight_weight(m.t.j, lambda),
                                        CartanDatum::pair_coweight_weight(m.t.k, lambda)));
    }
    return r;
}

Scalar shapovalov(const CoverAlgebra& u, const HalfElement& x, const HalfElement& y, const Weight& lambda) {
    const CoverElement rho = u.sigma(u.omega(u.minus(x)));
    return verma_act(u, rho, y, lambda).coeff(FreeWord());
}

std::pair<ModuleVector, ModuleVector> highest_weight_braid_image(const WeightModule& v, const Word& h) {
    const CartanDatum& c = v.datum();
    if (!c.word_is_reduced(h)) throw NotReduced("braid word is not reduced");
    BraidWord w;
    for (int i : h) w.push_back({i, 1});
    ModuleVector lhs = module_braid(v, w, v.highest_vector());
    ModuleVector rhs = v.highest_vector();
    const std::size_t n = h.size();
    for (std::size_t k = n; k-- > 0;) {
        // a_k = < s_{i_N} ... s_{i_{k+1}} (alpha_{i_k}^vee), lambda >
        Word tail(h.rbegin(), h.rbegin() + static_cast<long>(n - 1 - k));
        Coweight cw(c.rank(), 0);
        cw[h[k]] = 1;
        const long a = CartanDatum::pair_coweight_weight(c.apply_word_coweight(tail, cw), v.highest_weight());
        rhs = v.F(h[k], a, rhs);
    }
    return {lhs, rhs};
}

std::pair<HalfElement, HalfElement> verma_identity(const HalfAlgebra& f, int i, int j, const Weight& lambda) {
    const CartanDatum& c = f.datum();
    const int m = c.braid_order(i, j);
    if (m == kInfiniteOrder) throw InfiniteOrder("braid order of the pair is infinite");
    auto exponent = [&](int first, int second, int k) {
        // < ... s_second s_first s_second (alpha_first^vee), lambda > with m - k factors
        const int len = m - k;
        Word w(len);
        for (int t = 0; t < len; ++t) w[t] = (len - 1 - t) % 2 == 0 ? second : first;
        Coweight cw(c.rank(), 0);
        cw[first] = 1;
        return CartanDatum::pair_coweight_weight(c.apply_word_coweight(w, cw), lambda);
    };
    HalfElement x = HalfAlgebra::one();
    HalfElement y = HalfAlgebra::one();
    for (int k = 1; k <= m; ++k) {
        const bool odd = k % 2 == 1;
        x = HalfAlgebra::multiply(x, f.divided_power(odd ? i : j, exponent(odd ? i : j, odd ? j : i, k)));
        y = HalfAlgebra::multiply(y, f.divided_power(odd ? j : i, exponent(odd ? j : i, odd ? i : j, k)));
    }
    return {x, y};
}

Scalar string_braid_lhs(long h, long k, long d, long e) {
    const long m = h + k;
    return sign_power(k) * Scalar::monomial(e * (m * k + binom2(k + 1)), d * (h * k + k));
}

Scalar string_braid_rhs(long h, long k, long d, long e) {
    Scalar s;
    for (long a = 0; a <= h; ++a) {
        for (long b = 0; b <= a + k; ++b) {
            const long cc = h - k - a + b;
            if (cc < 0) continue;
            const long pe = b * (cc + k) + binom2(b + 1) + cc + cc * (h - k);
            s += sign_power(b) * Scalar::monomial(e * pe, d * (-a * cc + b)) * qbinom(cc + k, cc, d, e) *
                 qbinom(a + k, b, d, e) * qbinom(h, a, d, e);
        }
    }
    return s;
}

}  // namespace qcov
