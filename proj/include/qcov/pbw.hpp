#pragma once

#include "qcov/braid.hpp"
#include "qcov/linalg.hpp"
#include "qcov/modules.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qcov {

/// Exponents of J~_1, ..., J~_r reduced mod 2; entries at even indices stay 0.
using JExponent = std::vector<int>;
/// Element of the group algebra U0_J.
using U0JElement = LinComb<JExponent>;
/// J~_a times an E-word, summed.
using UpJElement = LinComb<std::pair<JExponent, FreeWord>>;

class NotInUpJ : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAdapted : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularNorm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which derivation cuts out the subalgebra: left (_i r, giving U+_J[i]) or right (r_i, its sigma image).
enum class Derivation { Left, Right };
/// Side on which the divided powers of E_i stand in a decomposition.
enum class Side { Left, Right };

struct PbwMonomial {
    Word word;
    std::vector<long> c;
    int sign = 1;
    RootVec weight;
    UpJElement element;
};

struct GramCertificate {
    std::size_t size = 0;
    bool orthogonal = true;
    bool units = true;
    /// Each norm is a pi-power times the product of the divided-power norms.
    bool norms_match = true;
    /// The pi-exponent found for each monomial (0 or 1), -1 where no match.
    std::vector<int> pi_exponents;
    /// Per weight: number of monomials and the dimension of that weight space (complete weights only).
    std::map<RootVec, std::pair<std::size_t, std::size_t>> counts;
    bool spans = true;
    bool ok() const { return orthogonal && units && norms_match && spans; }
};

/// The subalgebra of U generated by the E_i and J~_i, with its U0_J-valued form.
/// Caches are unsynchronised; use one instance per thread.
class PositivePart {
public:
    explicit PositivePart(const CoverAlgebra& u);

    const CoverAlgebra& algebra() const { return u_; }
    const HalfAlgebra& half() const { return u_.half(); }
    const BraidGroupAction& braid() const { return t_; }
    int rank() const { return u_.rank(); }

    JExponent zero_exponent() const { return JExponent(rank(), 0); }
    JExponent add(const JExponent& a, const JExponent& b) const;

    U0JElement u0j_one() const { return U0JElement(zero_exponent()); }
    U0JElement u0j_multiply(const U0JElement& a, const U0JElement& b) const;
    /// Value at the character sending J~_k to chi[k] (entries +-1).
    Scalar u0j_character(const U0JElement& a, const std::vector<int>& chi) const;
    /// Non-zero-divisor test: no character value vanishes at either value of pi.
    bool u0j_is_unit(const U0JElement& a) const;
    std::optional<U0JElement> u0j_inverse(const U0JElement& a) const;
    std::vector<std::vector<int>> characters() const;

    UpJElement one() const { return UpJElement({zero_exponent(), FreeWord()}); }
    UpJElement E(int i, long n = 1) const;
    UpJElement Jtilde(int i) const;
    UpJElement from_half(const HalfElement& x, const JExponent& j) const;
    UpJElement from_half(const HalfElement& x) const { return from_half(x, zero_exponent()); }
    /// nullopt when x has a part outside U+_J.
    std::optional<UpJElement> from_cover(const CoverElement& x) const;
    /// Throws NotInUpJ.
    UpJElement require(const CoverElement& x) const;
    CoverElement to_cover(const UpJElement& x) const;

    UpJElement multiply(const UpJElement& a, const UpJElement& b) const;
    UpJElement product(const std::vector<UpJElement>& xs) const;
    UpJElement scale(const U0JElement& a, const UpJElement& x) const;
    std::map<JExponent, HalfElement> components(const UpJElement& x) const;
    /// Weights of the E-words that occur.
    std::vector<RootVec> weights(const UpJElement& x) const;
    bool is_zero(const UpJElement& x) const;
    bool equals(const UpJElement& x, const UpJElement& y) const { return is_zero(x - y); }

    /// T_i^{sign}(x), throwing NotInUpJ when the image leaves U+_J.
    UpJElement braid_image(const BraidWord& w, const UpJElement& x) const;
    std::optional<UpJElement> try_braid_image(const BraidWord& w, const UpJElement& x) const;

    U0JElement form(const UpJElement& x, const UpJElement& y) const;
    UpJElement derivation(Derivation d, int i, const UpJElement& x) const;
    bool in_subalgebra(const UpJElement& x, int i, Derivation d) const;

    /// Word representatives of a basis of the weight space f_nu.
    const std::vector<FreeWord>& weight_basis(const RootVec& nu) const;
    /// Coordinates of a homogeneous x in f_nu along weight_basis(nu).
    std::vector<Scalar> coordinates(const HalfElement& x, const RootVec& nu) const;
    /// Basis of the kernel of the chosen derivation on f_nu.
    const std::vector<HalfElement>& kernel_basis(const RootVec& nu, int i, Derivation d) const;

    /// x = sum_t E_i^(t) x_t (Side::Left) or sum_t x_t E_i^(t) (Side::Right), every x_t killed by d.
    std::vector<std::pair<long, UpJElement>> i_decompose(const UpJElement& x, int i, Side side,
                                                         Derivation d = Derivation::Left) const;

    UpJElement e_small(int i, int j, long m) const;
    UpJElement e_small_prime(int i, int j, long m) const;
    /// Both sides of the coproduct formula for e(i,j;m) (prime = false) or e'(i,j;m), compared in f (x) f.
    bool coproduct_e_small_check(int i, int j, long m, bool prime = false) const;

    bool is_admissible(const Word& h) const;
    bool is_adapted(const Word& h, std::size_t p, const UpJElement& x) const;
    /// Throws NotAdapted.
    UpJElement L_element(const Word& h, const std::vector<long>& c, std::size_t p, const UpJElement& x) const;

    /// E^(c1) T(E^(c2)) TT(E^(c3)) ... for sign +1; for sign -1 the factors
    /// ... T^-1T^-1(E^(c3)) T^-1(E^(c2)) E^(c1) are taken in this reversed order.
    UpJElement pbw_monomial(const Word& h, const std::vector<long>& c, int sign = 1) const;
    /// All monomials whose weight has height <= max_height. Throws NotReduced, NotFiniteType.
    std::vector<PbwMonomial> pbw_basis(const Word& h, long max_height, int sign = 1) const;
    /// All monomials with c_1 + ... + c_n <= degree.
    std::vector<PbwMonomial> pbw_by_degree(const Word& h, long degree, int sign = 1) const;
    /// complete_weights: compare the count per weight with the dimension of f_nu.
    GramCertificate gram_certificate(const std::vector<PbwMonomial>& basis, bool complete_weights = true) const;
    /// x = sum_k c_k b_k with c_k = (x, b_k)(b_k, b_k)^{-1}. Throws SingularNorm.
    std::map<std::size_t, U0JElement> pbw_coordinates(const UpJElement& x, const std::vector<PbwMonomial>& basis) const;

    /// The E-words of x with every J~ factor dropped.
    HalfElement strip(const UpJElement& x) const;
    /// The part of r(x) left after projecting the second factor along U+_J E_i onto U+_J[i].
    HalfTensor rprime(const HalfElement& x, int i) const;
    /// The part of r(y) left after projecting the first factor along E_i U+_J onto its sigma-kernel.
    HalfTensor rdoubleprime(const HalfElement& y, int i) const;
    /// (T_i^{-1} (x) T_i^{-1})('r(x)) against ''r(T_i^{-1} x) for homogeneous x in U+_J[i],
    /// compared after dropping the J~ factors of the images.
    bool rprime_compatible(const HalfElement& x, int i) const;

private:
    using TensorTerms = std::vector<std::pair<HalfElement, HalfElement>>;
    /// x (x) y = sum x_m (x) b_m (right = true) or sum b_l (x) y_l, with b running over weight bases.
    TensorTerms expand(const HalfTensor& x, bool right) const;
    HalfElement project(const HalfElement& x, int i, Side side, Derivation d) const;
    std::map<RootVec, HalfElement> split_weights(const HalfElement& x) const;
    const ScalarMatrix& gram_inverse(const RootVec& nu) const;
    const UpJElement& root_vector(const BraidWord& prefix, int i, long c) const;
    void check_word(const Word& h) const;

    const CoverAlgebra& u_;
    BraidGroupAction t_;
    mutable std::map<RootVec, std::vector<FreeWord>> basis_memo_;
    mutable std::map<RootVec, ScalarMatrix> gram_inverse_memo_;
    mutable std::map<std::tuple<RootVec, int, Derivation>, std::vector<HalfElement>> kernel_memo_;
    mutable std::map<std::tuple<std::vector<std::pair<int, int>>, int, long>, UpJElement> root_memo_;
};

}  // namespace qcov
