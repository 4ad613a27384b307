#pragma once

#include "hopfchain/combinatorics.hpp"
#include "hopfchain/key.hpp"
#include "hopfchain/rational.hpp"

#include <string>
#include <vector>

namespace hopfchain {

// Rock-breaking: eigenfunctions of the chain on sym_h indexed by partitions.
Rational rock_f(const Partition& mu, const Partition& lambda);
Rational rock_g(const Partition& mu, const Partition& lambda);
// sum_i C(lambda_i, j) a^((1-j)m): expected number of j-subsets of one rock
// after m steps, bounding P(some rock has size >= j).
Rational rock_expectation_bound(const Partition& lambda, int j, int a, int m);

// Tree-pruning on ck_forests.
Integer tree_factorial(const Key& tree);
// Subtrees of T isomorphic to C: a vertex and a parent-closed set of its descendants.
std::size_t tree_copy_count(const Key& C, const Key& T);
Rational tree_fC(const Key& C, const Key& T);

struct RationalInterval {
    Rational lower;
    Rational upper;
};
// C! #{C in T} / (deg C! deg C) <= f_C(T) <= C(n', deg C) #{C in T} / (n' - deg C + 1),
// with n' the degree of the largest component of T.
RationalInterval tree_fC_bounds(const Key& C, const Key& T);
// a^((1 - deg C)m) deg C! deg C / C! f_C(T) bounds P(X_m contains a copy of C).
Rational tree_copy_bound(const Key& C, const Key& T, int a, int m);

// Riffle shuffling statistics.
enum class ShuffleStatistic { descents, peaks_minus_valleys, inversions_left, pattern };
ShuffleStatistic parse_shuffle_statistic(const std::string& name);

// descents: asc - des (right, 1/a); peaks_minus_valleys: peak - vall (right,
// a^-2); inversions_left: C(n,2)/2 - sum_i C(nu_i,2)/2 - inv (left, 1/a);
// pattern: sum of fSh_u over consecutive subwords of length |u| (right, a^(1-|u|)).
Rational shuffle_statistic_eigenfunction(ShuffleStatistic kind, const Word& w, const Word& pattern = {});
// Eigenvalue a^-e; returns e.
int shuffle_statistic_decay(ShuffleStatistic kind, const Word& pattern = {});

int ascents(const Word& w);
int descents(const Word& w);
int peaks(const Word& w);
int valleys(const Word& w);
int double_ascents(const Word& w);
int double_descents(const Word& w);
int inversions(const Word& w);

// Expectations from an ascending deck of n distinct cards.
Rational expected_descents(int n, int a, int m);
Rational expected_peaks(int n, int a, int m);

// Descent-set chain on qsym_F.
Rational qsym_right_f(const Composition& I, const Composition& J);
Rational qsym_left_g(const Composition& I, const Composition& J);
// Character of the ribbon representation of J at cycle type lambda, by
// signed fillings of the ribbon.
Integer ribbon_character(const Composition& J, const Partition& lambda);
Rational descent_probability_from_identity(int n, int a, int m, const Composition& J);

// Basis orders of the published tables where one exists, else canonical.
std::vector<Key> rock_table_order(int n);
std::vector<Key> schur_table_order(int n);
std::vector<Key> qsym_table_order(int n);

}  // namespace hopfchain
