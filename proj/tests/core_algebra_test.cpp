#include "hopfchain/combinatorics.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/key.hpp"
#include "hopfchain/lincomb.hpp"
#include "hopfchain/matrix.hpp"
#include "hopfchain/rational.hpp"
#include "hopfchain/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace hopfchain;

TEST(Rational, PrintsAndParsesReducedFractions)
{
    EXPECT_EQ(to_string(Rational(6, 8)), "3/4");
    EXPECT_EQ(to_string(Rational(-10, 5)), "-2");
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
    EXPECT_EQ(parse_rational("12"), Rational(12));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, RoundTripsRandomFractions)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    for (int i = 0; i < 500; ++i) {
        const Rational r(num(rng), den(rng));
        EXPECT_EQ(parse_rational(to_string(r)), r);
    }
}

TEST(Rational, CountingFunctionsMatchRecurrences)
{
    Integer f = 1;
    for (int n = 0; n <= 30; ++n) {
        if (n > 0) f *= n;
        EXPECT_EQ(factorial(n), f);
    }
    // Pascal's rule
    for (int n = 1; n <= 40; ++n)
        for (int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(multinomial({2, 1, 1, 1}), 60);
    EXPECT_EQ(multinomial({3, 4}), binomial(7, 3));
    EXPECT_EQ(rational_pow(Rational(2), -3), Rational(1, 8));
    EXPECT_EQ(rational_pow(Rational(-2, 3), 3), Rational(-8, 27));
}

TEST(Key, OrdersByKindDegreeThenData)
{
    EXPECT_LT(word_key({9, 9}), word_key({1, 1, 1}));
    EXPECT_LT(word_key({1, 2}), word_key({2, 1}));
    EXPECT_LT(word_key({5}), partition_key({1}));
    EXPECT_EQ(partition_key({1, 3, 2}), partition_key({3, 2, 1}));
}

TEST(Key, TextForms)
{
    EXPECT_EQ(to_string(word_key({3, 1, 4, 2, 1})), "(31421)");
    EXPECT_EQ(to_string(word_key({10, 2, 1})), "(10,2,1)");
    EXPECT_EQ(to_string(partition_key({1, 3})), "(3,1)");
    EXPECT_EQ(to_string(schur_key({2, 1})), "s(2,1)");
    EXPECT_EQ(to_string(power_sum_key({2, 1})), "p(2,1)");
    EXPECT_EQ(to_string(composition_key({1, 3})), "(1,3)");
    EXPECT_EQ(parse_int_list("(3,5,2,1)"), (std::vector<int>{3, 5, 2, 1}));
    EXPECT_EQ(parse_int_list("(31421)"), (std::vector<int>{3, 1, 4, 2, 1}));
    EXPECT_EQ(parse_int_list("2,1"), (std::vector<int>{2, 1}));
}

TEST(LinComb, ArithmeticDropsZeros)
{
    const Key x = word_key({1}), y = word_key({2});
    LinComb v(x, 2);
    v.add(y, Rational(1, 3));
    LinComb w(x, -2);
    const LinComb sum = v + w;
    EXPECT_EQ(sum.size(), 1u);
    EXPECT_EQ(sum.coeff(y), Rational(1, 3));
    EXPECT_EQ(sum.coeff(x), 0);
    EXPECT_EQ(Rational(3) * sum, LinComb(y, 1));
    EXPECT_EQ(lincomb_axpy(2, v, w), LinComb(x, 2) + LinComb(y, Rational(2, 3)));
    EXPECT_TRUE((v - v).empty());
}

TEST(TensorComb, MergeIsDistributive)
{
    TensorComb a(1), b(1);
    a.add({word_key({1})}, 2);
    a.add({word_key({2})}, 1);
    b.add({word_key({3})}, 5);
    const TensorComb ab = tensor_merge({a, b});
    EXPECT_EQ(ab.arity(), 2);
    EXPECT_EQ(ab.coeff({word_key({1}), word_key({3})}), 10);
    EXPECT_EQ(ab.coeff({word_key({2}), word_key({3})}), 5);
    EXPECT_EQ(ab.size(), 2u);
}

TEST(Matrix, InverseAndPowers)
{
    const std::vector<Key> basis{word_key({1}), word_key({2}), word_key({3})};
    ExactMatrix m(basis, basis);
    const int entries[3][3] = {{2, 1, 0}, {0, 1, 4}, {1, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = entries[i][j];
    EXPECT_EQ(m * inverse(m), identity_matrix(basis));
    EXPECT_EQ(matrix_power(m, 3), m * m * m);
    EXPECT_EQ(matrix_power(m, 0), identity_matrix(basis));
    EXPECT_EQ(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}), 2u);
    ExactMatrix singular(basis, basis);
    EXPECT_THROW(inverse(singular), std::domain_error);
    EXPECT_EQ(transpose(transpose(m)), m);
}

TEST(Combinatorics, PartitionAndCompositionCounts)
{
    const int partition_counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        EXPECT_EQ(static_cast<int>(ps.size()), partition_counts[n]);
        for (const auto& p : ps) {
            EXPECT_EQ(std::accumulate(p.begin(), p.end(), 0), n);
            EXPECT_TRUE(std::is_sorted(p.rbegin(), p.rend()));
        }
        EXPECT_EQ(compositions_of(n).size(), std::size_t{1} << (n - 1));
    }
    EXPECT_EQ(partitions_of(4).front(), (Partition{4}));
    EXPECT_EQ(partitions_of(4).back(), (Partition{1, 1, 1, 1}));
}

TEST(Combinatorics, DivisionsAndRefinement)
{
    EXPECT_EQ(division_points({1, 3, 2}), (std::vector<int>{1, 4}));
    EXPECT_EQ(composition_from_divisions(6, {1, 4}), (Composition{1, 3, 2}));
    EXPECT_TRUE(refines({1, 2, 1, 2}, {3, 3}));
    EXPECT_FALSE(refines({2, 2, 2}, {3, 3}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) {
            const std::size_t parts = c.size();
            EXPECT_EQ(refinements_of(c).size(), std::size_t{1} << (n - parts));
            EXPECT_EQ(coarsenings_of(c).size(), std::size_t{1} << (parts - 1));
        }
    EXPECT_EQ(relative_decomposition({1, 2, 1, 2}, {3, 3}), (std::vector<Composition>{{1, 2}, {1, 2}}));
}

TEST(Combinatorics, WordsAndShuffles)
{
    EXPECT_EQ(words_of_multidegree({2, 1, 2}).size(), 30u);
    EXPECT_EQ(multidegree_of({1, 3, 1, 3, 2}), (std::vector<int>{2, 1, 2}));
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            Word u(static_cast<std::size_t>(p)), v(static_cast<std::size_t>(q));
            std::iota(u.begin(), u.end(), 1);
            std::iota(v.begin(), v.end(), 10);
            int total = 0;
            for (const auto& [w, c] : shuffles(u, v)) total += c;
            EXPECT_EQ(total, binomial(p + q, p));
        }
    // repeated letters give multiplicities
    EXPECT_EQ(shuffles({1}, {1}).at({1, 1}), 2);
}

class HopfAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(HopfAxioms, HoldThroughDegreeFour)
{
    const auto alg = get_instance(GetParam());
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(hopf_axiom_failure(*alg, n), "") << GetParam() << " n=" << n;
}

INSTANTIATE_TEST_SUITE_P(Instances, HopfAxioms, ::testing::ValuesIn(instance_names()));
