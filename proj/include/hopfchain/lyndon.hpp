#pragma once

#include "hopfchain/combinatorics.hpp"
#include "hopfchain/rational.hpp"

#include <utility>
#include <vector>

namespace hopfchain {

// Letters are positive integers ordered numerically. The same code serves the
// graded NSym alphabet, where letter i stands for S^i.

bool is_lyndon(const Word& w);  // throws on the empty word
std::vector<Word> lyndon_factorization(const Word& w);  // weakly decreasing Lyndon factors
std::pair<Word, Word> standard_factorization(const Word& u);  // second part is the longest proper Lyndon suffix
int lyndon_factor_count(const Word& w);

// Signed count of hedgerow rearrangements of w_prime spelling w, divided by
// k! times the stabiliser of the factor multiset. Zero on degree mismatch.
Rational shuffle_right_eigenfunction(const Word& w_prime, const Word& w);

// Signed count of branch exchanges of the binary tree of Lyndon u spelling v.
long long lyndon_tree_count(const Word& u, const Word& v);

Composition descent_composition(const Word& w);

std::vector<Word> lyndon_words_of_multidegree(const std::vector<int>& nu);

}  // namespace hopfchain
