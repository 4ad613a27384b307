#include "hopfchain/chain.hpp"
#include "hopfchain/combinatorics.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"
#include "hopfchain/simulate.hpp"
#include "hopfchain/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

using namespace hopfchain;

namespace {

Word identity_word(int n)
{
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return w;
}

// GSR a-shuffle of the ordered deck: an arrangement with r rising sequences
// has probability C(n + a - r, n) / a^n.
Rational gsr_probability(const Word& arrangement, int a)
{
    const int n = static_cast<int>(arrangement.size());
    std::vector<int> position(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(arrangement[static_cast<std::size_t>(i)])] = i;
    int rising = 1;
    for (int v = 1; v < n; ++v)
        if (position[static_cast<std::size_t>(v) + 1] < position[static_cast<std::size_t>(v)]) ++rising;
    return Rational(binomial(n + a - rising, n)) / rational_pow(Rational(a), n);
}

// Each rock of size s splits into a ordered pieces with multinomial(s; pieces) / a^s.
std::map<Key, Rational> rock_breaking_row(const Partition& lambda, int a)
{
    std::map<Key, Rational> row;
    std::vector<int> pieces;
    Rational weight = 1;
    std::function<void(std::size_t)> rock = [&](std::size_t r) {
        if (r == lambda.size()) {
            row[partition_key(pieces)] += weight;
            return;
        }
        std::vector<int> split(static_cast<std::size_t>(a), 0);
        std::function<void(int, int)> piece = [&](int slot, int left) {
            if (slot == a - 1) {
                split[static_cast<std::size_t>(slot)] = left;
                const Rational w = Rational(multinomial(split)) / rational_pow(Rational(a), lambda[r]);
                const std::size_t before = pieces.size();
                for (int p : split)
                    if (p > 0) pieces.push_back(p);
                weight *= w;
                rock(r + 1);
                weight /= w;
                pieces.resize(before);
                return;
            }
            for (int p = 0; p <= left; ++p) {
                split[static_cast<std::size_t>(slot)] = p;
                piece(slot + 1, left - p);
            }
        };
        piece(0, lambda[r]);
    };
    rock(0);
    return row;
}

Rational entry(const Chain& c, const ExactMatrix& m, const Key& x, const Key& y) { return m(c.index(x), c.index(y)); }

}  // namespace

TEST(Chain, RowsAreStochasticEverywhere)
{
    for (const auto& name : instance_names()) {
        const auto alg = get_instance(name);
        for (int n = 1; n <= 4; ++n)
            for (const auto& degree : degrees_of(*alg, n))
                for (int a : {2, 3, 4}) EXPECT_EQ(chain_rows_failure(*alg, degree, a), "") << name << " n=" << n << " a=" << a;
    }
}

TEST(Chain, RiffleShuffleMatchesRisingSequenceFormula)
{
    for (int n = 1; n <= 5; ++n)
        for (int a : {2, 3}) {
            const Chain chain = build_chain_multi(get_instance("shuffle"), std::vector<int>(static_cast<std::size_t>(n), 1), a);
            const Key start = word_key(identity_word(n));
            for (const Key& y : chain.states) EXPECT_EQ(entry(chain, chain.K, start, y), gsr_probability(y.data, a)) << to_string(y);
        }
}

TEST(Chain, RockBreakingMatchesMultinomialSplitting)
{
    for (int n = 1; n <= 6; ++n)
        for (int a : {2, 3}) {
            const Chain chain = build_chain(get_instance("sym_h"), n, a);
            for (const Key& x : chain.states) {
                const auto row = rock_breaking_row(x.data, a);
                for (const Key& y : chain.states) {
                    const auto it = row.find(y);
                    EXPECT_EQ(entry(chain, chain.K, x, y), it == row.end() ? Rational(0) : it->second) << to_string(x) << " -> " << to_string(y);
                }
            }
        }
}

TEST(Chain, StationaryDistributions)
{
    const auto words = build_chain_multi(get_instance("shuffle"), {2, 1}, 2);
    const auto st = stationary_distributions(words);
    ASSERT_TRUE(st.unique);
    for (const auto& p : st.distributions[0]) EXPECT_EQ(p, Rational(1, 3));

    for (const std::string name : {"sym_h", "graphs", "ck_forests"}) {
        const Chain chain = build_chain(get_instance(name), 4, 2);
        const auto s = stationary_distributions(chain);
        ASSERT_TRUE(s.unique) << name;
        const auto it = std::find(s.distributions[0].begin(), s.distributions[0].end(), Rational(1));
        ASSERT_NE(it, s.distributions[0].end()) << name;
        EXPECT_EQ(factor_count(*chain.algebra, chain.states[static_cast<std::size_t>(it - s.distributions[0].begin())]), 4) << name;
    }
}

TEST(Chain, SpectralExpansionReproducesPowers)
{
    for (const std::string name : {"sym_h", "sym_schur", "qsym_F", "graphs", "ck_forests"}) {
        const Chain chain = build_chain(get_instance(name), 4, 2);
        const auto lefts = left_eigenbasis(chain);
        const auto rights = right_eigenbasis(chain);
        for (std::size_t i = 0; i < lefts.size(); ++i)
            for (std::size_t j = 0; j < rights.size(); ++j) EXPECT_EQ(duality_pairing(rights[j], lefts[i]), i == j ? 1 : 0) << name;
        for (int m = 1; m <= 3; ++m) EXPECT_EQ(matrix_power_via_spectrum(chain, m, lefts, rights), matrix_power(chain.K, m)) << name;
    }
}

TEST(Chain, EigenvaluesArePowersOfA)
{
    const Chain chain = build_chain(get_instance("ck_forests"), 5, 3);
    for (const auto& f : right_eigenbasis(chain)) {
        EXPECT_EQ(eigenvalue(chain, f), rational_pow(Rational(3), f.exponent - 5));
        EXPECT_TRUE(satisfies_eigen_equation(chain, f));
    }
}

TEST(Chain, TimeReversalOfShufflingIsTheFreeAssociativeChain)
{
    for (int n = 2; n <= 4; ++n) {
        const std::vector<int> nu(static_cast<std::size_t>(n), 1);
        const Chain shuffle = build_chain_multi(get_instance("shuffle"), nu, 3);
        const Chain free = build_chain_multi(get_instance("free_assoc"), nu, 3);
        const ExactMatrix reversed = time_reversal(shuffle);
        for (const Key& x : shuffle.states)
            for (const Key& y : shuffle.states) EXPECT_EQ(entry(shuffle, reversed, x, y), entry(free, free.K, x, y));
    }
    EXPECT_THROW(time_reversal(build_chain(get_instance("sym_h"), 3, 2)), std::domain_error);
}

TEST(Chain, DescentLumpingAndItsFailureUnderAWrongMap)
{
    for (int n = 2; n <= 5; ++n) EXPECT_EQ(descent_lumping_failure(n, 2), "");
    const Chain source = build_chain_multi(get_instance("shuffle"), {1, 1, 1}, 2);
    const Chain target = build_chain(get_instance("qsym_F"), 3, 2);
    const auto wrong = [](const Key& w) {
        const Key des = theta_descent(w.data);
        if (des == composition_key({3})) return composition_key({1, 2});
        if (des == composition_key({1, 2})) return composition_key({3});
        return des;
    };
    EXPECT_FALSE(check_lumping(wrong, source, target).ok);
}

TEST(Chain, AbsorptionAgreesWithMatrixPowers)
{
    for (const std::string name : {"sym_h", "graphs", "ck_forests"}) {
        const auto alg = get_instance(name);
        const Chain base = build_chain(alg, 5, 2);
        const Key absorbing = [&] {
            for (const Key& x : base.states)
                if (factor_count(*alg, x) == 5) return x;
            throw std::logic_error("no absorbing state");
        }();
        for (int m = 1; m <= 3; ++m) {
            const Chain chain = build_chain(alg, 5, 1 << m);
            const ExactMatrix Km = matrix_power(base.K, m);
            for (const Key& x0 : base.states) {
                const Rational direct = Km(base.index(x0), base.index(absorbing));
                EXPECT_EQ(absorption_probability(chain, x0), direct) << name << " " << to_string(x0);
                EXPECT_EQ(absorption_probability_characters(chain, x0), direct) << name << " " << to_string(x0);
            }
        }
    }
    EXPECT_THROW(absorption_probability(build_chain(get_instance("qsym_F"), 3, 2), composition_key({3})), std::invalid_argument);
}

TEST(Chain, GraphReachabilityBounds)
{
    // 0 adjacent to 1, 2, 3; edges 12, 14, 34
    const Key x = graph_canonicalize(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 4}});
    const Key y = graph_canonicalize(5, {{0, 1}, {1, 2}, {3, 4}});  // induced path on three vertices plus an edge
    const auto graphs = get_instance("graphs");
    EXPECT_EQ(free_commutative_right_value(*graphs, y, x), Rational(4, 120));
    const Chain chain = build_chain(graphs, 5, 2);
    for (int m = 1; m <= 3; ++m) {
        const ExactMatrix Km = matrix_power(chain.K, m);
        Rational still = 0;
        for (const Key& z : chain.states)
            if (reaches(chain, z, y)) still += entry(chain, Km, x, z);
        const Rational loose = reachability_bound_loose(chain, y, x, m);
        EXPECT_EQ(loose, rational_pow(Rational(2), 1 - 3 * m) * 4);
        EXPECT_LE(still, reachability_bound(chain, y, x, m));
        EXPECT_LE(reachability_bound(chain, y, x, m), loose);
        EXPECT_LE(still, reachability_bound_any_start(chain, y, m));
    }
}

TEST(Chain, BowtieConnectedTriplesDecay)
{
    const Key bowtie = bowtie_graph();
    const Chain chain = build_chain(get_instance("graphs"), 5, 2);
    const auto connected_triples = [](const Key& g) {
        int count = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) count += graph_connected(induced_subgraph(g, {a, b, c})) ? 1 : 0;
        return count;
    };
    EXPECT_EQ(connected_triples(bowtie), 6);
    for (int m = 1; m <= 3; ++m) {
        const ExactMatrix Km = matrix_power(chain.K, m);
        Rational expected = 0, big_component = 0;
        for (const Key& z : chain.states) {
            const Rational p = entry(chain, Km, bowtie, z);
            expected += p * connected_triples(z);
            if (connected_triples(z) > 0) big_component += p;
        }
        EXPECT_EQ(expected, rational_pow(Rational(2), -2 * m) * 6);
        EXPECT_LE(big_component, expected);
    }
}

TEST(Chain, Validation)
{
    EXPECT_THROW(build_chain(get_instance("shuffle"), 3, 2), std::domain_error);
    EXPECT_THROW(build_chain(get_instance("sym_p"), 2, 2), InvalidStateSpace);
    setenv("HOPFCHAIN_MAX_BASIS", "10", 1);
    EXPECT_EQ(max_basis_size(), 10u);
    EXPECT_THROW(build_chain(get_instance("sym_h"), 6, 2), std::length_error);
    EXPECT_NO_THROW(build_chain(get_instance("sym_h"), 5, 2));
    unsetenv("HOPFCHAIN_MAX_BASIS");
    EXPECT_EQ(max_basis_size(), 5000u);
}
