#include "hopfchain/chain.hpp"
#include "hopfchain/combinatorics.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace hopfchain;

namespace {

bool lyndon_by_rotations(const Word& w)
{
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word r(w.begin() + static_cast<long>(i), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(i));
        if (!(w < r)) return false;
    }
    return true;
}

int moebius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    return n > 1 ? -result : result;
}

// Witt's necklace formula for multidegree nu.
Integer lyndon_count(const std::vector<int>& nu)
{
    const int n = std::accumulate(nu.begin(), nu.end(), 0);
    int g = 0;
    for (int v : nu) g = std::gcd(g, v);
    Rational total = 0;
    for (int d = 1; d <= g; ++d)
        if (g % d == 0) {
            std::vector<int> parts;
            for (int v : nu) parts.push_back(v / d);
            total += Rational(moebius(d)) * Rational(multinomial(parts));
        }
    total /= n;
    return numerator(total);
}

std::vector<std::vector<int>> small_multidegrees()
{
    return {{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 2}, {3, 1}, {1, 1, 2}, {2, 1, 2}, {1, 1, 1, 1}, {2, 2, 2}, {3, 3}, {1, 2, 1, 2}};
}

}  // namespace

TEST(Lyndon, IsLyndonMatchesRotationOracle)
{
    for (const auto& nu : small_multidegrees())
        for (const Word& w : words_of_multidegree(nu)) EXPECT_EQ(is_lyndon(w), lyndon_by_rotations(w)) << to_string(word_key(w));
    EXPECT_THROW(is_lyndon({}), std::invalid_argument);
}

TEST(Lyndon, CountsMatchNecklaceFormula)
{
    for (const auto& nu : small_multidegrees()) {
        const auto words = lyndon_words_of_multidegree(nu);
        EXPECT_EQ(Integer(words.size()), lyndon_count(nu));
        for (const Word& w : words) EXPECT_TRUE(lyndon_by_rotations(w));
    }
}

TEST(Lyndon, FactorizationIsUniqueDecreasingConcatenation)
{
    for (const auto& nu : small_multidegrees())
        for (const Word& w : words_of_multidegree(nu)) {
            const auto factors = lyndon_factorization(w);
            Word joined;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                EXPECT_TRUE(lyndon_by_rotations(factors[i]));
                if (i > 0) {
                    EXPECT_FALSE(factors[i - 1] < factors[i]);
                }
                joined.insert(joined.end(), factors[i].begin(), factors[i].end());
            }
            EXPECT_EQ(joined, w);
            EXPECT_EQ(lyndon_factor_count(w), static_cast<int>(factors.size()));
        }
}

TEST(Lyndon, FactorizationExamples)
{
    EXPECT_EQ(lyndon_factorization({3, 5, 1, 4, 2}), (std::vector<Word>{{3, 5}, {1, 4, 2}}));
    EXPECT_EQ(lyndon_factorization({1, 3, 2, 1, 3}), (std::vector<Word>{{1, 3, 2}, {1, 3}}));
    EXPECT_EQ(lyndon_factorization({2, 3, 1, 1, 3}), (std::vector<Word>{{2, 3}, {1, 1, 3}}));
    EXPECT_EQ(lyndon_factorization({3, 2, 1}), (std::vector<Word>{{3}, {2}, {1}}));
}

TEST(Lyndon, StandardFactorizationSplitsIntoLyndonWords)
{
    for (const auto& nu : small_multidegrees())
        for (const Word& u : lyndon_words_of_multidegree(nu)) {
            if (u.size() < 2) continue;
            const auto [left, right] = standard_factorization(u);
            EXPECT_TRUE(is_lyndon(left));
            EXPECT_TRUE(is_lyndon(right));
            Word joined = left;
            joined.insert(joined.end(), right.begin(), right.end());
            EXPECT_EQ(joined, u);
            // no longer proper suffix is Lyndon
            for (std::size_t i = 1; i < u.size() - right.size(); ++i)
                EXPECT_FALSE(is_lyndon(Word(u.begin() + static_cast<long>(i), u.end())));
        }
}

TEST(Lyndon, ShuffleEigenfunctionSpotValues)
{
    EXPECT_EQ(shuffle_right_eigenfunction({1, 3, 2, 4, 5}, {2, 5, 4, 1, 3}), 1);
    EXPECT_EQ(shuffle_right_eigenfunction({1, 3, 2, 4, 5}, {2, 1, 3, 4, 5}), 0);
    EXPECT_EQ(shuffle_right_eigenfunction({1, 1, 2, 2}, {1, 2, 2, 1}), 0);
    EXPECT_EQ(shuffle_right_eigenfunction({3, 5, 1, 4, 2}, {1, 4, 2, 5, 3}), Rational(-1, 2));
}

TEST(Lyndon, ShuffleEigenfunctionIsOneOnLyndonPermutations)
{
    for (int n = 1; n <= 6; ++n)
        for (const Word& w : lyndon_words_of_multidegree(std::vector<int>(static_cast<std::size_t>(n), 1)))
            EXPECT_EQ(shuffle_right_eigenfunction(w, w), 1) << to_string(word_key(w));
}

TEST(Lyndon, ShuffleEigenfunctionsMatchChainEigenEquation)
{
    const auto shuffle = get_instance("shuffle");
    for (const auto& nu : {std::vector<int>{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {1, 2, 1, 1}}) {
        const Chain chain = build_chain_multi(shuffle, nu, 2);
        for (const Key& wp : chain.states) {
            EigFunction f;
            f.side = EigFunction::Side::right;
            f.exponent = lyndon_factor_count(wp.data);
            for (const Key& w : chain.states) f.values.push_back(shuffle_right_eigenfunction(wp.data, w.data));
            EXPECT_TRUE(satisfies_eigen_equation(chain, f)) << to_string(wp);
        }
    }
}

TEST(Lyndon, DescentComposition)
{
    EXPECT_EQ(descent_composition({3, 1, 4, 2, 1}), (Composition{1, 2, 1, 1}));
    EXPECT_EQ(descent_composition({1, 2, 3}), (Composition{3}));
    EXPECT_EQ(descent_composition({1, 1, 2}), (Composition{3}));
}
