#pragma once

#include "qcov/lincomb.hpp"
#include "qcov/root_datum.hpp"

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qcov {

/// Word in the generators; each char holds a 0-based index.
using FreeWord = std::string;
using HalfElement = LinComb<FreeWord>;
using HalfTensor = LinComb<std::pair<FreeWord, FreeWord>>;
/// Element of f (x) ... (x) f with any number of factors.
using HalfMultiTensor = LinComb<std::vector<FreeWord>>;

FreeWord letter(int i);
FreeWord word_from(const Word& w);
Word to_index_word(const FreeWord& w);

/// The half quantum covering group f, kept as the free algebra on the
/// generators with equality decided by the bilinear form.
class HalfAlgebra {
public:
    explicit HalfAlgebra(CartanDatum datum);

    const CartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank(); }

    RootVec weight(const FreeWord& w) const;
    int parity(const FreeWord& w) const;
    /// Weight of a homogeneous element (of its first term; zero vector if empty).
    RootVec weight(const HalfElement& x) const;

    static HalfElement one() { return HalfElement(FreeWord()); }
    static HalfElement theta(int i) { return HalfElement(letter(i)); }
    HalfElement divided_power(int i, long n) const;
    static HalfElement multiply(const HalfElement& x, const HalfElement& y);

    long d(int i) const { return datum_.d(i); }
    long pi_scale(int i) const { return datum_.pi_scale(i); }
    /// Quantum numbers at q_i, pi_i.
    Scalar qint_i(long n, int i) const { return qint(n, d(i), pi_scale(i)); }
    Scalar qfact_i(long n, int i) const { return qfact(n, d(i), pi_scale(i)); }
    Scalar qbinom_i(long n, long k, int i) const { return qbinom(n, k, d(i), pi_scale(i)); }
    /// pi_i^a q_i^b
    Scalar mono_i(int i, long a, long b) const { return Scalar::monomial(a * pi_scale(i), b * d(i)); }
    /// pi^{p(x)p(i)} q^{-(|x|, alpha_i)} for a word x.
    Scalar twist(const FreeWord& x, int i) const;

    /// The derivation with _i r(theta_j) = delta_ij acting on the left.
    HalfElement deriv_left(int i, const HalfElement& x) const;
    /// The derivation r_i acting on the right.
    HalfElement deriv_right(int i, const HalfElement& x) const;
    HalfElement deriv_left(int i, const FreeWord& w) const;
    HalfElement deriv_right(int i, const FreeWord& w) const;

    /// The twisted coproduct r.
    HalfTensor coproduct(const HalfElement& x) const;
    HalfTensor coproduct(const FreeWord& w) const;
    /// (x (x) y)(x' (x) y') = pi^{p(x')p(y)} q^{-(|x'|,|y|)} xx' (x) yy'
    HalfTensor tensor_multiply(const HalfTensor& a, const HalfTensor& b) const;

    /// (theta_i, theta_i) = 1/(1 - pi_i q_i^2)
    Scalar generator_norm(int i) const;
    /// prod_i (theta_i, theta_i)^{nu_i}
    Scalar weight_factor(const RootVec& nu) const;
    /// Form on words divided by weight_factor; a Laurent polynomial.
    Scalar reduced_form(const FreeWord& a, const FreeWord& b) const;
    Scalar form(const FreeWord& a, const FreeWord& b) const;
    Scalar form(const HalfElement& x, const HalfElement& y) const;
    /// (x1 (x) x2, y1 (x) y2) = (x1, y1)(x2, y2)
    Scalar tensor_form(const HalfTensor& x, const HalfTensor& y) const;

    HalfElement serre_element(int i, int j) const;

    /// All words of weight nu in lexicographic order.
    std::vector<FreeWord> words_of_weight(const RootVec& nu) const;
    /// Pairs x against every word of each weight it occupies.
    bool is_zero(const HalfElement& x) const;
    bool equals(const HalfElement& x, const HalfElement& y) const { return is_zero(x - y); }
    bool is_zero(const HalfTensor& x) const;
    bool is_zero(const HalfMultiTensor& x) const;

    /// Rank of the form on the words of weight nu at pi = sign.
    std::size_t rank_of_weight(const RootVec& nu, int sign) const;

    std::string to_string(const HalfElement& x, const std::string& symbol = "th") const;
    static std::string word_to_string(const FreeWord& w, const std::string& symbol);

private:
    Scalar reduced_form_locked(const FreeWord& a, const FreeWord& b) const;

    CartanDatum datum_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, Scalar> form_memo_;
    mutable std::map<RootVec, std::vector<FreeWord>> words_memo_;
};

}  // namespace qcov
