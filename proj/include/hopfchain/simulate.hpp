#pragma once

#include "hopfchain/chain.hpp"
#include "hopfchain/combinatorics.hpp"
#include "hopfchain/key.hpp"
#include "hopfchain/rational.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hopfchain {

// Trial t of a run with seed s uses a std::mt19937_64 seeded with
// splitmix64(s + (t + 1) * 0x9E3779B97F4A7C15). Trials are independent of the
// worker that runs them, so results do not depend on the thread count.
using Engine = std::mt19937_64;
std::uint64_t splitmix64(std::uint64_t x);
Engine trial_engine(std::uint64_t seed, std::uint64_t trial);
// Uniform integer in [0, n) by rejection; identical on every platform.
int uniform_below(Engine& rng, int n);

enum class ChainKind { riffle, rock, tree, graph };
ChainKind parse_chain_kind(const std::string& name);
std::string to_string(ChainKind kind);
// shuffle, sym_h, ck_forests, graphs
std::string algebra_of(ChainKind kind);

// Each card gets a uniform pile label; pile sizes are the label counts, piles
// are consecutive segments of the deck, and position j takes the next card of
// pile label[j].
Word riffle_step(const Word& deck, int a, Engine& rng);
// Multinomial cut followed by dropping cards from piles with probability
// proportional to pile size. Test oracle for riffle_step.
Word riffle_cut_interleave(const Word& deck, int a, Engine& rng);
Partition rock_step(const Partition& lambda, int a, Engine& rng);
// Colour exchange: colours a, a-1, ..., 2 are promoted into trunks of the
// remaining forest, then edges between different colours are cut.
Key tree_prune_step(const Key& forest, int a, Engine& rng);
Key graph_step(const Key& graph, int a, Engine& rng);
Key chain_step(ChainKind kind, const Key& x, int a, Engine& rng);

struct Statistic {
    std::string name;
    std::function<Rational(const Key&)> value;
    // exact E{value(X_m) | X_0 = x0}
    std::function<Rational(const Key& x0, int m)> expectation;
};

// riffle: descents, peaks, valleys, double_runs (distinct letters only),
//         asc_minus_des, peaks_minus_valleys;
// rock: pairs, triples; tree: fC:<tree>; graph: edges, triangles.
Statistic named_statistic(ChainKind kind, const std::string& name, int a);
// Throws std::invalid_argument unless f is a right eigenfunction of the chain.
Statistic eigenfunction_statistic(const Chain& chain, const EigFunction& f);

struct TrialReport {
    std::string statistic;
    int m = 0;
    long trials = 0;
    double mean = 0;
    Rational exact;
    double stderr_ = 0;
    double z = 0;  // (mean - exact) / stderr; 0 when both agree with zero spread
};

// threads <= 0 uses the hardware concurrency.
TrialReport expectation_test(ChainKind kind, const Key& x0, const Statistic& stat, int a, int m, long trials,
                             std::uint64_t seed, int threads = 0);

struct ChiSquareReport {
    double statistic = 0;
    int dof = 0;
    double p_value = 0;
    std::string detail;
};

// Goodness of fit of one-step samples from x0 against the exact row of K.
// Cells with expected count below 5 are pooled.
ChiSquareReport one_step_chi_square(ChainKind kind, const Chain& chain, const Key& x0, long trials,
                                    std::uint64_t seed, int threads = 0);

// Expectation tests over all four chains; 20 statistic/step pairs.
std::vector<TrialReport> standard_suite(long trials, std::uint64_t seed, int threads = 0);

// Two triangles sharing a vertex.
Key bowtie_graph();

}  // namespace hopfchain
