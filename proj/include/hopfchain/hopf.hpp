#pragma once

#include "hopfchain/combinatorics.hpp"
#include "hopfchain/key.hpp"
#include "hopfchain/lincomb.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hopfchain {

// Graded connected Hopf algebra given by structure constants on a basis.
// Implementations supply compute_product/compute_coproduct; the public
// accessors memoise them and are safe to call from several threads.
class HopfAlgebra {
public:
    virtual ~HopfAlgebra() = default;

    virtual std::string name() const = 0;
    virtual bool is_commutative() const = 0;
    virtual bool is_cocommutative() const = 0;
    virtual Key unit() const = 0;
    virtual std::vector<Key> basis(int n) const = 0;

    // Multidegree support (shuffle and free associative algebras).
    virtual bool has_multidegree() const { return false; }
    virtual std::vector<int> multidegree(const Key& k) const { return {k.degree}; }
    virtual std::vector<Key> basis_multi(const std::vector<int>& nu) const;

    // Free-commutative bases: monomials in the generators.
    virtual bool free_commutative_basis() const { return false; }
    virtual std::vector<Key> factorize(const Key& k) const;
    // Free generators of a commutative algebra in degree d, as basis keys.
    virtual std::vector<Key> generators(int d) const;

    const LinComb& product(const Key& a, const Key& b) const;
    const TensorComb& coproduct(const Key& x) const;
    const TensorComb& iterated_coproduct(int a, const Key& x) const;
    const TensorComb& reduced_coproduct(int r, const Key& x) const;
    const LinComb& hopf_power(int a, const Key& x) const;
    const LinComb& eulerian(const Key& x) const;

protected:
    virtual LinComb compute_product(const Key& a, const Key& b) const = 0;
    virtual TensorComb compute_coproduct(const Key& x) const = 0;

private:
    template <class Map, class K, class F>
    const typename Map::mapped_type& memo(Map& m, const K& key, F&& compute) const;

    mutable std::mutex mutex_;
    mutable std::map<std::pair<Key, Key>, LinComb> product_memo_;
    mutable std::map<Key, TensorComb> coproduct_memo_;
    mutable std::map<std::pair<int, Key>, TensorComb> iterated_memo_;
    mutable std::map<std::pair<int, Key>, TensorComb> reduced_memo_;
    mutable std::map<std::pair<int, Key>, LinComb> power_memo_;
    mutable std::map<Key, LinComb> eulerian_memo_;
};

// Basis of a degree given as plain degree {n} or as a multidegree.
std::vector<Key> basis_of(const HopfAlgebra& alg, const std::vector<int>& degree);

LinComb multiply(const HopfAlgebra& alg, const LinComb& x, const LinComb& y);
LinComb iterated_product(const HopfAlgebra& alg, const std::vector<Key>& keys);
LinComb iterated_product(const HopfAlgebra& alg, const std::vector<LinComb>& factors);
// m^[a] applied termwise to a tensor
LinComb multiply_out(const HopfAlgebra& alg, const TensorComb& t);

TensorComb iterated_coproduct(const HopfAlgebra& alg, int a, const LinComb& x);
TensorComb reduced_coproduct_iter(const HopfAlgebra& alg, int r, const LinComb& x);
LinComb hopf_power(const HopfAlgebra& alg, int a, const LinComb& x);
LinComb eulerian_idempotent(const HopfAlgebra& alg, const LinComb& x);
LinComb higher_eulerian(const HopfAlgebra& alg, int i, const LinComb& x);

struct EigVector {
    LinComb vector;
    int exponent = 0;  // eigenvalue a^exponent for the Hopf power
    std::string label;
    std::optional<Key> label_key;
};

bool is_eigenvector(const HopfAlgebra& alg, const LinComb& v, int a, int exponent);
bool equal_up_to_scalar(const LinComb& x, const LinComb& y);

// Part A: products of Eulerian images of free generators.
std::vector<EigVector> eigenbasis_commutative(const HopfAlgebra& alg, const std::vector<LinComb>& generators, int n);
std::vector<EigVector> eigenbasis_commutative(const HopfAlgebra& alg, int n);

// Part B: symmetrised products of primitives.
std::vector<EigVector> eigenbasis_cocommutative(const HopfAlgebra& alg, const std::vector<LinComb>& primitives, int n);

// Part A': P maps a word to the basis element playing its role under the
// isomorphism with the shuffle algebra.
using ShuffleImage = std::function<LinComb(const Word&)>;
std::vector<EigVector> eigenbasis_shuffle_basis(const HopfAlgebra& alg, const std::vector<Word>& words,
                                                const ShuffleImage& P);
// Checks P(u)P(v) = sum over interleavings of P on the given pairs; returns the
// first violating pair when there is one.
std::optional<std::pair<Word, Word>> shuffle_law_violation(const HopfAlgebra& alg, const ShuffleImage& P,
                                                           const std::vector<std::pair<Word, Word>>& pairs);

// Part B' in the form g_w = sum_{w'} fSh_w(w') e(S_{w'_1})...e(S_{w'_l}).
using LetterImage = std::function<Key(int)>;
std::vector<EigVector> eigenbasis_free_basis(const HopfAlgebra& alg, const std::vector<Word>& words,
                                             const LetterImage& letter);

// Coefficient of x^degree y^k in prod (1 - y x^d)^{-b_d}, with b_d determined
// by the dimensions of the algebra.
Integer eigenvalue_multiplicity(const HopfAlgebra& alg, const std::vector<int>& degree, int k);

// Symmetrised products of degree-one basis elements.
std::vector<EigVector> top_eigenspace(const HopfAlgebra& alg, const std::vector<int>& degree);

}  // namespace hopfchain
