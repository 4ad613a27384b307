#pragma once

#include "hopfchain/rational.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace hopfchain {

using Word = std::vector<int>;
using Composition = std::vector<int>;
using Partition = std::vector<int>;  // weakly decreasing

// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
// Compositions of n, grouped by length, each group in lexicographic order.
std::vector<Composition> compositions_of(int n);

// Size of the stabiliser of a tuple under permutations: product of multiplicity factorials.
template <class T>
Integer stabilizer_size(std::vector<T> items)
{
    std::sort(items.begin(), items.end());
    Integer z = 1;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        while (j < items.size() && items[j] == items[i]) ++j;
        z *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return z;
}

// Set of partial sums strictly between 0 and |I|.
std::vector<int> division_points(const Composition& c);
Composition composition_from_divisions(int n, const std::vector<int>& divisions);

// J refines I when every division of I is a division of J.
bool refines(const Composition& finer, const Composition& coarser);
std::vector<Composition> refinements_of(const Composition& c);
std::vector<Composition> coarsenings_of(const Composition& c);

// Splits the diagram of j at the divisions of i; one composition per part of i.
std::vector<Composition> relative_decomposition(const Composition& j, const Composition& i);

// All distinct rearrangements of a multiset of letters, in lexicographic order.
std::vector<Word> rearrangements(Word letters);
// Letters 1..k with multiplicities nu[0..k-1], all arrangements.
std::vector<Word> words_of_multidegree(const std::vector<int>& nu);
std::vector<int> multidegree_of(const Word& w);

// Interleavings of u and v with multiplicity.
std::map<Word, int> shuffles(const Word& u, const Word& v);

// Multisets (as sorted index vectors) of items with given degrees summing to n.
std::vector<std::vector<int>> multisets_with_degree(const std::vector<int>& item_degree, int n);

}  // namespace hopfchain
