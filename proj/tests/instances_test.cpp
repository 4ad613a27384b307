#include "hopfchain/chain.hpp"
#include "hopfchain/combinatorics.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/simulate.hpp"
#include "hopfchain/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hopfchain;

namespace {

TensorComb tensor(std::initializer_list<std::pair<std::pair<Key, Key>, Rational>> terms)
{
    TensorComb t(2);
    for (const auto& [pair, c] : terms) t.add({pair.first, pair.second}, c);
    return t;
}

const Key unit_word = word_key({});

}  // namespace

TEST(Shuffle, ProductAndCoproduct)
{
    const auto alg = get_instance("shuffle");
    EXPECT_EQ(alg->product(word_key({1}), word_key({2})), LinComb(word_key({1, 2})) + LinComb(word_key({2, 1})));
    EXPECT_EQ(alg->product(word_key({1}), word_key({1})), LinComb(word_key({1, 1}), 2));
    EXPECT_EQ(alg->coproduct(word_key({1, 2})), tensor({{{word_key({1, 2}), unit_word}, 1},
                                                        {{word_key({1}), word_key({2})}, 1},
                                                        {{unit_word, word_key({1, 2})}, 1}}));
}

TEST(FreeAssociative, ProductAndCoproduct)
{
    const auto alg = get_instance("free_assoc");
    EXPECT_EQ(alg->product(word_key({2}), word_key({1})), LinComb(word_key({2, 1})));
    EXPECT_EQ(alg->coproduct(word_key({1, 2})), tensor({{{word_key({1, 2}), unit_word}, 1},
                                                        {{word_key({1}), word_key({2})}, 1},
                                                        {{word_key({2}), word_key({1})}, 1},
                                                        {{unit_word, word_key({1, 2})}, 1}}));
}

TEST(Symmetric, CompleteHomogeneous)
{
    const auto alg = get_instance("sym_h");
    const Key one = alg->unit();
    EXPECT_EQ(alg->product(partition_key({1}), partition_key({2})), LinComb(partition_key({2, 1})));
    EXPECT_EQ(alg->coproduct(partition_key({2})), tensor({{{partition_key({2}), one}, 1},
                                                           {{partition_key({1}), partition_key({1})}, 1},
                                                           {{one, partition_key({2})}, 1}}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            Integer denom = 1;
            for (int p : lambda) denom *= factorial(p);
            EXPECT_EQ(eta(*alg, partition_key(lambda)), Rational(factorial(n)) / Rational(denom));
        }
}

TEST(Symmetric, SchurLittlewoodRichardson)
{
    const auto alg = get_instance("sym_schur");
    const Key one = alg->unit();
    EXPECT_EQ(alg->product(schur_key({1}), schur_key({1})), LinComb(schur_key({2})) + LinComb(schur_key({1, 1})));
    EXPECT_EQ(alg->product(schur_key({2, 1}), schur_key({1})),
              LinComb(schur_key({3, 1})) + LinComb(schur_key({2, 2})) + LinComb(schur_key({2, 1, 1})));
    EXPECT_EQ(alg->coproduct(schur_key({2, 1})), tensor({{{schur_key({2, 1}), one}, 1},
                                                         {{schur_key({2}), schur_key({1})}, 1},
                                                         {{schur_key({1, 1}), schur_key({1})}, 1},
                                                         {{schur_key({1}), schur_key({2})}, 1},
                                                         {{schur_key({1}), schur_key({1, 1})}, 1},
                                                         {{one, schur_key({2, 1})}, 1}}));
    // eta is the dimension of the irreducible representation
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            EXPECT_EQ(eta(*alg, schur_key(lambda)), Rational(kostka_number(lambda, std::vector<int>(static_cast<std::size_t>(n), 1))));
}

TEST(Symmetric, KostkaChangeOfBasisIsInvertible)
{
    EXPECT_EQ(kostka_number({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(kostka_number({3, 2}, {2, 2, 1}), 2);
    EXPECT_EQ(kostka_number({2, 2}, {3, 1}), 0);
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            LinComb back;
            for (const auto& [h, c] : schur_to_h(lambda)) back += c * h_to_schur(h.data);
            EXPECT_EQ(back, LinComb(schur_key(lambda)));
        }
}

TEST(QuasiSymmetric, FundamentalProductAndCoproduct)
{
    const auto alg = get_instance("qsym_F");
    const Key one = alg->unit();
    EXPECT_EQ(alg->product(composition_key({1}), composition_key({1})), LinComb(composition_key({2})) + LinComb(composition_key({1, 1})));
    EXPECT_EQ(alg->coproduct(composition_key({1, 1})), tensor({{{composition_key({1, 1}), one}, 1},
                                                               {{composition_key({1}), composition_key({1})}, 1},
                                                               {{one, composition_key({1, 1})}, 1}}));
    // M_I = sum over refinements J of I of (-1)^(l(J)-l(I)) F_J
    for (int n = 1; n <= 5; ++n)
        for (const auto& I : compositions_of(n)) {
            LinComb expected;
            for (const auto& J : refinements_of(I))
                expected.add(composition_key(J), (J.size() - I.size()) % 2 == 0 ? 1 : -1);
            EXPECT_EQ(qsym_monomial(I), expected);
        }
}

TEST(QuasiSymmetric, DescentMap)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& I : compositions_of(n)) EXPECT_EQ(theta_descent(descent_representative(I)), composition_key(I));
    EXPECT_THROW(theta_descent({1, 1, 2}), std::invalid_argument);
}

TEST(Graphs, CanonicalFormIgnoresLabels)
{
    const std::vector<Edge> bowtie{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
    const Key canonical = graph_canonicalize(5, bowtie);
    EXPECT_EQ(canonical, bowtie_graph());
    std::mt19937 rng(3);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabelled;
        for (auto [u, v] : bowtie) relabelled.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        EXPECT_EQ(graph_canonicalize(5, relabelled), canonical);
    }
    EXPECT_EQ(parse_graph(to_string(canonical)), canonical);
    EXPECT_EQ(graph_edges(canonical).size(), 6u);
    EXPECT_TRUE(graph_connected(canonical));
    EXPECT_FALSE(graph_connected(graph_canonicalize(3, {{0, 1}})));
}

TEST(Graphs, CountsProductAndCoproduct)
{
    const auto alg = get_instance("graphs");
    const std::size_t counts[] = {1, 1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(alg->basis(n).size(), counts[n]);
    const Key dot = graph_canonicalize(1, {}), edge = graph_canonicalize(2, {{0, 1}});
    EXPECT_EQ(alg->product(dot, dot), LinComb(graph_canonicalize(2, {})));
    EXPECT_EQ(alg->coproduct(edge), tensor({{{edge, alg->unit()}, 1}, {{dot, dot}, 2}, {{alg->unit(), edge}, 1}}));
    for (int n = 1; n <= 5; ++n)
        for (const Key& g : alg->basis(n)) EXPECT_EQ(eta(*alg, g), Rational(factorial(n)));
}

TEST(Forests, CountsAndConnesKreimerCoproduct)
{
    const auto alg = get_instance("ck_forests");
    const std::size_t counts[] = {1, 1, 2, 4, 9, 20};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(alg->basis(n).size(), counts[n]);
    const Key q3 = forest_canonicalize("[**]"), p2 = forest_canonicalize("[*]"), dot = forest_canonicalize("*");
    const Key dots = forest_canonicalize("**");
    EXPECT_EQ(alg->coproduct(q3), tensor({{{q3, alg->unit()}, 1}, {{dots, dot}, 1}, {{dot, p2}, 2}, {{alg->unit(), q3}, 1}}));
    EXPECT_EQ(path_tree(2), p2);
    EXPECT_EQ(forest_canonicalize("[*[**]]"), forest_canonicalize("[[**]*]"));
    EXPECT_EQ(make_tree({dot, p2}), forest_canonicalize("[*[*]]"));
    EXPECT_EQ(forest_trees(make_forest({p2, dot})).size(), 2u);
}

TEST(Forests, ShapeRoundTrips)
{
    const auto alg = get_instance("ck_forests");
    for (int n = 1; n <= 6; ++n)
        for (const Key& f : alg->basis(n)) {
            const ForestShape s = forest_shape(f);
            ASSERT_EQ(s.size(), n);
            for (int v = 0; v < n; ++v) EXPECT_LT(s.parent[static_cast<std::size_t>(v)], v);
            EXPECT_EQ(forest_from_parents(s.parent, std::vector<bool>(static_cast<std::size_t>(n), true)), f);
            EXPECT_EQ(parse_basis_key(*alg, to_string(f)), f);
        }
}

TEST(Instances, ParseRoundTripsEveryBasisElement)
{
    for (const auto& name : instance_names()) {
        const auto alg = get_instance(name);
        for (int n = 1; n <= 4; ++n)
            for (const Key& k : basis_up_to_relabelling(*alg, n)) EXPECT_EQ(parse_basis_key(*alg, to_string(k)), k) << name;
    }
    EXPECT_THROW(get_instance("nope"), std::invalid_argument);
}

TEST(Instances, PowerSumsAreNotAStateSpaceBasis)
{
    const auto alg = get_instance("sym_p");
    const auto report = validate_state_space_basis(*alg, {3});
    ASSERT_FALSE(report.valid());
    EXPECT_NE(report.violations.front().find("primitive"), std::string::npos);
    EXPECT_THROW(build_chain(alg, 3, 2), InvalidStateSpace);
    // degree one alone is fine
    EXPECT_TRUE(validate_state_space_basis(*alg, {1}).valid());
    for (const auto& name : instance_names())
        for (const auto& degree : degrees_of(*get_instance(name), 4))
            EXPECT_TRUE(validate_state_space_basis(*get_instance(name), degree).valid()) << name;
}
