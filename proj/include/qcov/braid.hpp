#pragma once

#include "qcov/covering_algebra.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace qcov {

struct BraidLetter {
    int index;
    int sign;  // +1 or -1
};
using BraidWord = std::vector<BraidLetter>;

/// Generator symbol: E_j^(n), F_j^(n), K_mu or J_mu.
struct Generator {
    enum class Kind { E, F, K, J };
    Kind kind;
    int index = 0;
    long power = 1;
    Coweight mu;

    static Generator e(int j, long n = 1) { return {Kind::E, j, n, {}}; }
    static Generator f(int j, long n = 1) { return {Kind::F, j, n, {}}; }
    static Generator k(Coweight mu) { return {Kind::K, 0, 1, std::move(mu)}; }
    static Generator jj(Coweight mu) { return {Kind::J, 0, 1, std::move(mu)}; }
};

class InfiniteOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BraidRelationReport {
    int i = 0;
    int j = 0;
    int order = 0;
    /// One entry per generator checked: its text and whether both sides agree.
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
};

/// The braid automorphisms T_i and T_i^{-1} of U.
class BraidGroupAction {
public:
    explicit BraidGroupAction(const CoverAlgebra& u) : u_(u) {}

    const CoverAlgebra& algebra() const { return u_; }

    CoverElement generator_image(int i, int sign, const Generator& g) const;
    CoverElement apply(int i, int sign, const CoverElement& x) const;
    /// Rightmost letter acts first.
    CoverElement apply(const BraidWord& w, const CoverElement& x) const;

    /// Generators E_k, F_k, K_{alpha_k^vee}, J_{alpha_k^vee} for every k.
    std::vector<std::pair<std::string, CoverElement>> generators() const;
    /// Compares T_i T_j T_i ... with T_j T_i T_j ... (m_ij factors) on all generators.
    BraidRelationReport verify_braid_relation(int i, int j) const;

    /// e(i,j;m) and e'(i,j;m).
    CoverElement e_small(int i, int j, long m) const;
    CoverElement e_small_prime(int i, int j, long m) const;

    /// T_i^{+-1}(E_j^(n)) and T_i^{+-1}(F_j^(n)) are A-combinations of divided-power words.
    bool integral_image_check(int i, long n, int j) const;
    /// Rewrites every run of equal letters as a divided power and tests the coefficients.
    bool divided_power_integral(const CoverElement& x) const;

private:
    CoverElement word_image(int i, int sign, bool is_e, const FreeWord& w) const;
    CoverElement monomial_image(int i, int sign, const Monomial& m) const;

    const CoverAlgebra& u_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, int, bool, FreeWord>, CoverElement> word_memo_;
};

BraidWord parse_braid_word(const std::string& text);
std::string braid_word_to_string(const BraidWord& w);

}  // namespace qcov
