#include "qcov/half_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcov;

namespace {

std::vector<CartanDatum> all_data() {
    return {CartanDatum::rank1_odd(), CartanDatum::spin_rank2(), CartanDatum::b2_super(), CartanDatum::a2()};
}

HalfElement random_element(const HalfAlgebra& f, std::mt19937& rng, const RootVec& nu) {
    auto words = f.words_of_weight(nu);
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> e(-2, 2);
    HalfElement x;
    for (const auto& w : words) x.add(w, Scalar(c(rng)) * Scalar::monomial(e(rng), e(rng)));
    return x;
}

// Coproduct of a word by repeated twisted multiplication of
// theta (x) 1 + 1 (x) theta, written out independently of the library.
HalfTensor oracle_coproduct(const HalfAlgebra& f, const FreeWord& w) {
    const auto& c = f.datum();
    HalfTensor acc(std::pair<FreeWord, FreeWord>{"", ""});
    for (char a : w) {
        HalfTensor next;
        for (const auto& [k, v] : acc) {
            // (L (x) R)(theta_a (x) 1) = pi^{p(a)p(R)} q^{-(alpha_a,|R|)} La (x) R
            long pe = 0;
            long qe = 0;
            for (char r : k.second) {
                pe += c.parity(a) * c.parity(r);
                qe -= c.dot(a, r);
            }
            next.add({k.first + a, k.second}, v * Scalar::monomial(pe, qe));
            next.add({k.first, k.second + a}, v);
        }
        acc = next;
    }
    return acc;
}

// Form from the coproduct axiom (x, theta_i y) = (r(x), theta_i (x) y),
// recursing on the first letter of the second argument.
Scalar oracle_form(const HalfAlgebra& f, const FreeWord& x, const FreeWord& y) {
    if (f.weight(x) != f.weight(y)) return Scalar();
    if (x.empty()) return Scalar(1);
    if (x.size() == 1) return f.generator_norm(x[0]);
    const int i = y[0];
    const FreeWord rest = y.substr(1);
    Scalar s;
    for (const auto& [k, v] : oracle_coproduct(f, x)) {
        if (k.first != letter(i)) continue;
        Scalar sub = oracle_form(f, k.second, rest);
        if (!sub.is_zero()) s += v * f.generator_norm(i) * sub;
    }
    return s;
}

}  // namespace

TEST(HalfAlgebra, Multiplication) {
    HalfAlgebra f(CartanDatum::b2_super());
    EXPECT_EQ(HalfAlgebra::multiply(f.theta(0), f.theta(1)), HalfElement(FreeWord("\x00\x01", 2)));
    HalfElement lhs = HalfAlgebra::multiply(f.divided_power(0, 2), f.theta(0));
    EXPECT_EQ(lhs, f.divided_power(0, 3) * f.qint_i(3, 0));
    HalfElement lhs2 = HalfAlgebra::multiply(f.divided_power(1, 2), f.theta(1));
    EXPECT_EQ(lhs2, f.divided_power(1, 3) * f.qint_i(3, 1));
}

TEST(HalfAlgebra, Derivations) {
    HalfAlgebra f(CartanDatum::b2_super());
    const auto& c = f.datum();
    FreeWord ij = letter(0) + letter(1);
    FreeWord ji = letter(1) + letter(0);
    EXPECT_EQ(f.deriv_left(0, ij), HalfElement(letter(1)));
    EXPECT_EQ(f.deriv_left(0, letter(0)), f.one());
    EXPECT_TRUE(f.deriv_left(0, letter(1)).empty());
    Scalar expect = Scalar::monomial(c.parity(1) * c.parity(0), -c.dot(1, 0));
    EXPECT_EQ(f.deriv_left(0, ji), HalfElement(letter(1), expect));
    EXPECT_EQ(f.deriv_right(0, ji), HalfElement(letter(1)));
}

TEST(HalfAlgebra, TwistedLeibniz) {
    std::mt19937 rng(17);
    for (const auto& datum : all_data()) {
        HalfAlgebra f(datum);
        const int n = datum.rank();
        for (int trial = 0; trial < 10; ++trial) {
            RootVec nx(n, 0), ny(n, 0);
            std::uniform_int_distribution<int> u(0, 2);
            for (int k = 0; k < n; ++k) {
                nx[k] = u(rng);
                ny[k] = u(rng);
            }
            HalfElement x = random_element(f, rng, nx);
            HalfElement y = random_element(f, rng, ny);
            FreeWord any_x = x.empty() ? "" : x.begin()->first;
            FreeWord any_y = y.empty() ? "" : y.begin()->first;
            for (int i = 0; i < n; ++i) {
                HalfElement lhs = f.deriv_left(i, HalfAlgebra::multiply(x, y));
                HalfElement rhs = HalfAlgebra::multiply(f.deriv_left(i, x), y) +
                                  HalfAlgebra::multiply(x, f.deriv_left(i, y)) * f.twist(any_x, i);
                EXPECT_EQ(lhs, rhs);
                HalfElement lhs2 = f.deriv_right(i, HalfAlgebra::multiply(x, y));
                HalfElement rhs2 = HalfAlgebra::multiply(f.deriv_right(i, x), y) * f.twist(any_y, i) +
                                   HalfAlgebra::multiply(x, f.deriv_right(i, y));
                EXPECT_EQ(lhs2, rhs2);
            }
        }
    }
}

TEST(HalfAlgebra, Coproduct) {
    HalfAlgebra f(CartanDatum::b2_super());
    using T = std::pair<FreeWord, FreeWord>;
    HalfTensor r1 = f.coproduct(f.theta(0));
    HalfTensor e1;
    e1.add(T{letter(0), ""}, 1);
    e1.add(T{"", letter(0)}, 1);
    EXPECT_EQ(r1, e1);
    EXPECT_EQ(f.coproduct(f.one()), HalfTensor(T{"", ""}));
    for (int i = 0; i < 2; ++i) {
        HalfTensor r2 = f.coproduct(f.divided_power(i, 2));
        HalfTensor expect;
        HalfElement d2 = f.divided_power(i, 2);
        for (const auto& [w, c] : d2) {
            expect.add(T{w, ""}, c);
            expect.add(T{"", w}, c);
        }
        expect.add(T{letter(i), letter(i)}, f.mono_i(i, -1, -1));
        EXPECT_EQ(r2, expect);
    }
    std::mt19937 rng(1);
    for (const auto& datum : all_data()) {
        HalfAlgebra g(datum);
        for (const auto& w : g.words_of_weight(RootVec(datum.rank(), 2))) {
            EXPECT_EQ(g.coproduct(w), oracle_coproduct(g, w));
        }
    }
}

TEST(HalfAlgebra, CoproductIsMultiplicative) {
    for (const auto& datum : all_data()) {
        HalfAlgebra f(datum);
        std::mt19937 rng(2);
        for (int trial = 0; trial < 5; ++trial) {
            RootVec nx(datum.rank(), 1), ny(datum.rank(), 0);
            ny[0] = 1;
            HalfElement x = random_element(f, rng, nx);
            HalfElement y = random_element(f, rng, ny);
            EXPECT_EQ(f.coproduct(HalfAlgebra::multiply(x, y)), f.tensor_multiply(f.coproduct(x), f.coproduct(y)));
        }
    }
}

TEST(HalfAlgebra, CoproductComponentsAreDerivations) {
    HalfAlgebra f(CartanDatum::b2_super());
    for (const auto& w : f.words_of_weight({2, 2})) {
        HalfTensor r = f.coproduct(w);
        for (int i = 0; i < 2; ++i) {
            HalfElement right_part;
            HalfElement left_part;
            for (const auto& [k, c] : r) {
                if (k.second == letter(i)) right_part.add(k.first, c);
                if (k.first == letter(i)) left_part.add(k.second, c);
            }
            EXPECT_EQ(right_part, f.deriv_right(i, w));
            EXPECT_EQ(left_part, f.deriv_left(i, w));
        }
    }
}

TEST(HalfAlgebra, BilinearForm) {
    HalfAlgebra f(CartanDatum::b2_super());
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(f.form(f.theta(i), f.theta(i)), (Scalar(1) - Scalar::pi_power(f.datum().parity(i)) * Scalar::q_power(2 * f.d(i))).inverse());
    }
    EXPECT_TRUE(f.form(f.theta(0), f.theta(1)).is_zero());
    // (theta^(2), theta^(2)) from the twisted coproduct of theta theta.
    for (int i = 0; i < 2; ++i) {
        FreeWord ii = letter(i) + letter(i);
        Scalar full = oracle_form(f, ii, ii);
        Scalar f2 = f.qint_i(2, i);
        EXPECT_EQ(f.form(f.divided_power(i, 2), f.divided_power(i, 2)), full / (f2 * f2));
    }
    for (const auto& datum : all_data()) {
        HalfAlgebra g(datum);
        RootVec nu(datum.rank(), 2);
        if (datum.rank() == 1) nu = {3};
        auto words = g.words_of_weight(nu);
        for (const auto& a : words) {
            for (const auto& b : words) {
                EXPECT_EQ(g.form(a, b), oracle_form(g, a, b));
                EXPECT_EQ(g.form(a, b), g.form(b, a));
            }
        }
    }
}

TEST(HalfAlgebra, FormAgreesWithCoproduct) {
    std::mt19937 rng(8);
    HalfAlgebra f(CartanDatum::b2_super());
    for (int trial = 0; trial < 6; ++trial) {
        HalfElement x = random_element(f, rng, {2, 2});
        HalfElement y1 = random_element(f, rng, {1, 1});
        HalfElement y2 = random_element(f, rng, {1, 1});
        HalfTensor yy;
        for (const auto& [a, ca] : y1)
            for (const auto& [b, cb] : y2) yy.add({a, b}, ca * cb);
        EXPECT_EQ(f.form(x, HalfAlgebra::multiply(y1, y2)), f.tensor_form(f.coproduct(x), yy));
    }
}

TEST(HalfAlgebra, SerreElements) {
    for (const auto& datum : all_data()) {
        HalfAlgebra f(datum);
        for (int i = 0; i < datum.rank(); ++i) {
            for (int j = 0; j < datum.rank(); ++j) {
                if (i == j) continue;
                HalfElement s = f.serre_element(i, j);
                EXPECT_TRUE(f.is_zero(s)) << i << j << " rank " << datum.rank() << " p0 " << datum.parity(0);
                RootVec nu = f.weight(s);
                for (const auto& w : f.words_of_weight(nu)) EXPECT_TRUE(f.form(s, HalfElement(w)).is_zero());
            }
        }
    }
    HalfAlgebra spin(CartanDatum::spin_rank2());
    HalfElement expect;
    expect.add(letter(0) + letter(1), 1);
    expect.add(letter(1) + letter(0), -Scalar::pi());
    EXPECT_EQ(spin.serre_element(0, 1), expect);
    HalfAlgebra b2(CartanDatum::b2_super());
    EXPECT_EQ(b2.serre_element(0, 1).size(), 4u);
    EXPECT_FALSE(b2.equals(HalfElement(letter(0) + letter(1)), HalfElement(letter(1) + letter(0))));
    EXPECT_TRUE(b2.equals(b2.theta(0), b2.theta(0)));
}

TEST(HalfAlgebra, RankMatchesClassicalDimension) {
    HalfAlgebra f(CartanDatum::b2_super());
    // Kostant partition counts for B2 with positive roots i, j, i+j, 2i+j.
    EXPECT_EQ(f.rank_of_weight({1, 1}, 1), 2u);
    EXPECT_EQ(f.rank_of_weight({1, 1}, -1), 2u);
    EXPECT_EQ(f.rank_of_weight({2, 1}, 1), 3u);
    EXPECT_EQ(f.rank_of_weight({2, 1}, -1), 3u);
    EXPECT_EQ(f.rank_of_weight({3, 1}, -1), 3u);
    EXPECT_EQ(f.rank_of_weight({2, 2}, -1), 4u);
}
