#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcov {

/// Coordinates in the basis of simple roots (elements of the root lattice).
using RootVec = std::vector<long>;
/// Coordinates in the basis of fundamental weights: w[i] = <alpha_i^vee, w>.
using Weight = std::vector<long>;
/// Coordinates in the basis of simple coroots.
using Coweight = std::vector<long>;
/// Index sequence i_1 ... i_n.
using Word = std::vector<int>;

class DatumError : public std::invalid_argument {
public:
    enum class Axiom { Shape, C1, C2, C3, C4, P1, P2, Gcd };
    DatumError(Axiom axiom, const std::string& what) : std::invalid_argument(what), axiom_(axiom) {}
    Axiom axiom() const { return axiom_; }
    static std::string name(Axiom a);

private:
    Axiom axiom_;
};

class NotFiniteType : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Infinity in braid_order.
constexpr int kInfiniteOrder = 0;

enum class BraidRelationKind { Ordinary, Spin };

/// Generalised Cartan matrix with parity and symmetrising vector.
class CartanDatum {
public:
    CartanDatum() = default;
    /// Throws DatumError naming the first violated axiom.
    CartanDatum(std::vector<std::vector<long>> cartan, std::vector<int> parity, std::vector<long> d);

    /// Returns the violated axiom, if any, without constructing.
    static std::optional<DatumError> check(const std::vector<std::vector<long>>& cartan, const std::vector<int>& parity,
                                           const std::vector<long>& d);

    static CartanDatum rank1_odd();
    static CartanDatum rank1_even();
    static CartanDatum spin_rank2();
    static CartanDatum b2_super();
    static CartanDatum a2();

    int rank() const { return static_cast<int>(a_.size()); }
    long a(int i, int j) const { return a_[i][j]; }
    int parity(int i) const { return p_[i]; }
    long d(int i) const { return d_[i]; }
    /// Exponent e with pi_i = pi^e. Equal to d_i mod 2 whenever (P2) holds;
    /// for purely even data it is 0, so pi drops out of the structure.
    long pi_scale(int i) const { return p_[i]; }
    /// 1 - a_ij
    long b(int i, int j) const { return 1 - a_[i][j]; }
    const std::vector<std::vector<long>>& cartan() const { return a_; }
    const std::vector<int>& parities() const { return p_; }
    const std::vector<long>& symmetrizer() const { return d_; }

    /// (alpha_i, alpha_j) = d_i a_ij
    long dot(int i, int j) const { return d_[i] * a_[i][j]; }
    long symmetric_form(const RootVec& mu, const RootVec& nu) const;
    /// (alpha_i, nu)
    long dot_simple(int i, const RootVec& nu) const;
    /// sum nu_i p(i) mod 2
    int parity(const RootVec& nu) const;
    long height(const RootVec& nu) const;
    RootVec simple_root(int i) const;
    RootVec zero_root() const { return RootVec(a_.size(), 0); }
    /// Fundamental-weight coordinates of a root-lattice vector.
    Weight root_to_weight(const RootVec& nu) const;
    /// <alpha_i^vee, nu>
    long coroot_pairing(int i, const RootVec& nu) const;

    /// <mu, alpha_j> for mu in coroot coordinates.
    long pair_coweight_root(const Coweight& mu, int j) const;
    long pair_coweight_root(const Coweight& mu, const RootVec& nu) const;
    /// <mu, lambda> for mu in coroot coordinates, lambda in fundamental coordinates.
    static long pair_coweight_weight(const Coweight& mu, const Weight& lambda);
    /// d_i alpha_i^vee in coroot coordinates.
    Coweight tilde_coroot(int i) const;
    /// sum nu_i d_i alpha_i^vee.
    Coweight tilde(const RootVec& nu) const;

    Weight reflect_weight(int i, const Weight& lambda) const;
    RootVec reflect_root(int i, const RootVec& nu) const;
    Coweight reflect_coweight(int i, const Coweight& mu) const;
    /// s_{w_1} ... s_{w_n} applied to the argument (rightmost first).
    Weight apply_word_weight(const Word& w, Weight lambda) const;
    RootVec apply_word_root(const Word& w, RootVec nu) const;
    Coweight apply_word_coweight(const Word& w, Coweight mu) const;

    /// m_ij, or kInfiniteOrder.
    int braid_order(int i, int j) const;
    bool is_finite_type() const;
    /// Throws NotFiniteType.
    Word longest_word() const;
    std::vector<RootVec> positive_roots() const;
    bool word_is_reduced(const Word& w) const;

    /// spin(lambda)_i: lambda_i mod 2 for odd i, 0 otherwise.
    std::vector<int> spin(const Weight& lambda) const;
    /// Spin when varpi(i) = varpi(j) = 1 and a_ij = 0.
    BraidRelationKind spin_braid_relation_kind(int i, int j, const std::vector<int>& varpi) const;

    bool operator==(const CartanDatum& o) const { return a_ == o.a_ && p_ == o.p_ && d_ == o.d_; }

private:
    std::vector<std::vector<long>> a_;
    std::vector<int> p_;
    std::vector<long> d_;
};

/// True when every coordinate is nonnegative and some is positive.
bool is_positive_root(const RootVec& nu);

}  // namespace qcov
