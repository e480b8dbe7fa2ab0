#pragma once

#include "qcov/braid.hpp"
#include "qcov/linalg.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcov {

class NotDominant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotReduced : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sparse coordinates over the basis of a module.
using ModuleVector = LinComb<std::size_t>;

struct ModuleBasis {
    Weight weight;
    int parity = 0;
    /// For simple modules: the vector is F_word eta.
    FreeWord word;
    /// For tensor modules: the factor basis indices.
    std::size_t left = 0;
    std::size_t right = 0;
};

/// A finite-dimensional weight module, stored through the matrices of E_i and F_i.
class WeightModule {
public:
    /// V(lambda), cut out of the Verma module by the radical of the contravariant form.
    /// Throws NotDominant or NotFiniteType.
    static WeightModule simple(const CartanDatum& datum, const Weight& lambda);
    /// M (x) N with the action through the coproduct.
    static WeightModule tensor(const CoverAlgebra& u, const WeightModule& m, const WeightModule& n);

    const CartanDatum& datum() const { return datum_; }
    std::size_t dim() const { return basis_.size(); }
    const ModuleBasis& basis(std::size_t k) const { return basis_[k]; }
    const std::map<Weight, std::vector<std::size_t>>& weights() const { return weights_; }
    std::size_t dim(const Weight& mu) const;

    bool is_simple() const { return simple_; }
    bool is_tensor() const { return left_ != nullptr; }
    const Weight& highest_weight() const { return lambda_; }
    const WeightModule& left() const { return *left_; }
    const WeightModule& right() const { return *right_; }
    /// Contravariant form on the stored basis of a weight space (simple modules).
    const ScalarMatrix& gram(const Weight& mu) const;

    ModuleVector highest_vector() const { return ModuleVector(std::size_t{0}); }
    /// F_w eta for a simple module.
    ModuleVector from_word(const FreeWord& w) const;
    /// Index of x (x) y in a tensor module.
    std::size_t pair_index(std::size_t x, std::size_t y) const { return x * right_->dim() + y; }

    ModuleVector E(int i, const ModuleVector& v) const;
    ModuleVector F(int i, const ModuleVector& v) const;
    /// Divided powers.
    ModuleVector E(int i, long n, const ModuleVector& v) const;
    ModuleVector F(int i, long n, const ModuleVector& v) const;
    ModuleVector torus(const Torus& t, const ModuleVector& v) const;
    ModuleVector act(const CoverElement& x, const ModuleVector& v) const;
    /// (a (x) b)(x (x) y) = pi^{p(b)p(x)} ax (x) by on a tensor module.
    ModuleVector act(const CoverAlgebra& u, const CoverTensor& x, const ModuleVector& v) const;
    /// The semilinear involution fixing every F_w eta (simple modules only).
    ModuleVector bar(const ModuleVector& v) const;

    Scalar torus_value(const Torus& t, const Weight& mu) const;
    std::map<Weight, ModuleVector> split(const ModuleVector& v) const;
    std::string to_string(const ModuleVector& v) const;

private:
    explicit WeightModule(CartanDatum datum) : datum_(std::move(datum)) {}
    ModuleVector apply(const std::vector<std::vector<ModuleVector>>& m, int i, const ModuleVector& v) const;
    std::size_t add_basis(ModuleBasis b);

    CartanDatum datum_;
    std::vector<ModuleBasis> basis_;
    std::map<Weight, std::vector<std::size_t>> weights_;
    std::vector<std::vector<ModuleVector>> e_;
    std::vector<std::vector<ModuleVector>> f_;
    std::map<Weight, ScalarMatrix> gram_;
    bool simple_ = false;
    Weight lambda_;
    std::shared_ptr<const WeightModule> left_;
    std::shared_ptr<const WeightModule> right_;
};

/// The operators T_i' (sign +1) and T_i'' (sign -1) on an integrable module.
ModuleVector module_braid(const WeightModule& m, int i, int sign, const ModuleVector& v);
/// Rightmost letter acts first.
ModuleVector module_braid(const WeightModule& m, const BraidWord& w, const ModuleVector& v);

/// Decomposition of a module into irreducible strings for U(i), and the map
/// omega defined on each string from its highest vector.
class StringDecomposition {
public:
    StringDecomposition(const WeightModule& m, int i);

    /// Vectors killed by E_i, one list per weight.
    const std::vector<ModuleVector>& highest_vectors() const { return tops_; }
    /// Coordinates of v along F_i^(k) eta_s, keyed by (s, k).
    std::map<std::pair<std::size_t, long>, Scalar> coordinates(const ModuleVector& v) const;

    ModuleVector omega(const ModuleVector& v) const;
    ModuleVector omega_inverse(const ModuleVector& v) const;

private:
    struct Block {
        std::vector<std::pair<std::size_t, long>> labels;
        ScalarMatrix inverse;
    };
    const WeightModule& m_;
    int i_;
    std::vector<ModuleVector> tops_;
    std::vector<long> top_weight_;
    std::map<Weight, Block> blocks_;
};

/// L_i' (sign +1) and L_i'' (sign -1) on a tensor module:
/// sum_n c_n (pi_i q_i - q_i^-1)^n [n]_i! pi_i^{n p(x)} F_i^(n) x (x) E_i^(n) y with
/// c_n = q_i^{binom(n,2)} for L_i' and (-1)^n (pi_i q_i^-1)^{binom(n,2)} for L_i''.
ModuleVector quasi_r(const WeightModule& t, int i, int sign, const ModuleVector& z);
/// (T_i (x) T_i)(m (x) n) = pi_i^{s p(m)} T_i(m) (x) T_i(n), n of weight s; sign -1 uses T_i^{-1}.
ModuleVector tensor_braid(const WeightModule& t, int i, int sign, const ModuleVector& z);

/// x eta_lambda -> u x eta_lambda in the Verma module, with M(lambda) identified with f.
HalfElement verma_act(const CoverAlgebra& u, const CoverElement& x, const HalfElement& v, const Weight& lambda);
/// <x eta, y eta> = eta-coefficient of rho(x^-) y^- eta with rho = sigma omega.
Scalar shapovalov(const CoverAlgebra& u, const HalfElement& x, const HalfElement& y, const Weight& lambda);

/// T_{i_1} ... T_{i_N} eta and F_{i_1}^(a_1) ... F_{i_N}^(a_N) eta in V(lambda). Throws NotReduced.
std::pair<ModuleVector, ModuleVector> highest_weight_braid_image(const WeightModule& v, const Word& h);

/// The two m-factor divided-power products x and y of the Verma identity in rank two.
std::pair<HalfElement, HalfElement> verma_identity(const HalfAlgebra& f, int i, int j, const Weight& lambda);

/// Both sides of the scalar identity behind T_i'(F_i^(k) eta), at q_i = q^d and pi_i = pi^e.
Scalar string_braid_lhs(long h, long k, long d, long e);
Scalar string_braid_rhs(long h, long k, long d, long e);

}  // namespace qcov
