#pragma once

#include "hopfchain/hopf.hpp"
#include "hopfchain/matrix.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfchain {

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

class InvalidStateSpace : public std::invalid_argument {
public:
    explicit InvalidStateSpace(ValidationReport r);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Nonnegative structure constants up to the degree and no primitive basis
// elements above degree one.
ValidationReport validate_state_space_basis(const HopfAlgebra& alg, const std::vector<int>& degree);

// Sum of the coefficients of the n-fold reduced coproduct.
Rational eta(const HopfAlgebra& alg, const Key& x);

// Basis size cap, HOPFCHAIN_MAX_BASIS (default 5000).
std::size_t max_basis_size();

struct Chain {
    std::shared_ptr<const HopfAlgebra> algebra;
    int a = 2;
    std::vector<int> degree;  // {n} or a multidegree
    int n = 0;
    std::vector<Key> states;
    RationalVector eta;
    ExactMatrix K;

    std::size_t index(const Key& x) const { return K.row_index(x); }
};

// Throws InvalidStateSpace, std::length_error above the basis cap, and
// std::domain_error for plain degrees of multigraded algebras.
Chain build_chain(std::shared_ptr<const HopfAlgebra> alg, int n, int a);
Chain build_chain_multi(std::shared_ptr<const HopfAlgebra> alg, const std::vector<int>& nu, int a);

const ExactMatrix& transition_matrix(const Chain& chain);

struct StationaryResult {
    std::vector<std::string> labels;  // the degree-one multiset behind each distribution
    std::vector<RationalVector> distributions;
    bool unique = false;
};

StationaryResult stationary_distributions(const Chain& chain);

struct EigFunction {
    enum class Side { left, right };
    Side side = Side::left;
    RationalVector values;  // indexed by chain.states
    int exponent = 0;       // eigenvalue a^(exponent - n)
    std::string label;
};

Rational eigenvalue(const Chain& chain, const EigFunction& f);
bool satisfies_eigen_equation(const Chain& chain, const EigFunction& f);

// g(x) = eta(x) * coefficient of x
std::vector<EigFunction> left_eigenfunctions(const Chain& chain, const std::vector<EigVector>& vectors);
// f(x) = functional(x) / eta(x), for an eigenvector of the dual algebra
EigFunction right_eigenfunction_from_dual(const Chain& chain, const RationalVector& functional, int exponent,
                                          std::string label);

// Eigenvectors of the Hopf power in the chain's degree, chosen by the algebra:
// free generators (commutative), Lyndon words (shuffle, QSym), or free
// cocommutative words (free associative).
std::vector<EigVector> default_eigenvectors(const HopfAlgebra& alg, const std::vector<int>& degree);
std::vector<EigFunction> left_eigenbasis(const Chain& chain);
// Free-commutative bases use coproduct structure constants; otherwise the
// basis dual to left_eigenbasis.
std::vector<EigFunction> right_eigenbasis(const Chain& chain);
std::vector<EigFunction> dual_right_basis(const Chain& chain, const std::vector<EigFunction>& lefts);

// Right eigenfunction f_y(x) from coproduct structure constants on a
// free-commutative basis.
Rational free_commutative_right_value(const HopfAlgebra& alg, const Key& y, const Key& x);

Rational duality_pairing(const EigFunction& f, const EigFunction& g);

struct LumpingReport {
    bool ok = false;
    Rational max_violation;
    std::string detail;
};

LumpingReport check_lumping(const std::function<Key(const Key&)>& theta, const Chain& source, const Chain& target);

// K*(x,y) = pi(y) K(y,x) / pi(x); needs a unique positive stationary distribution.
ExactMatrix time_reversal(const Chain& chain);

// sum_i beta_i^m f_i(x) g_i(y); rights[i] must pair to delta with lefts[j].
ExactMatrix matrix_power_via_spectrum(const Chain& chain, int m, const std::vector<EigFunction>& lefts,
                                      const std::vector<EigFunction>& rights);

// Number of generator factors of a free-commutative basis element.
int factor_count(const HopfAlgebra& alg, const Key& x);
bool reaches(const Chain& chain, const Key& x, const Key& y);

Rational absorption_probability(const Chain& chain, const Key& x0);
// n!/eta(x0) times the character sum over the a-fold coproduct.
Rational absorption_probability_characters(const Chain& chain, const Key& x0);

// Upper bounds on P(X_m can still reach y).
Rational reachability_bound(const Chain& chain, const Key& y, const Key& x0, int m);
Rational reachability_bound_any_start(const Chain& chain, const Key& y, int m);
// min f_y replaced by 1/(l(y)! max eta)
Rational reachability_bound_loose(const Chain& chain, const Key& y, const Key& x0, int m);

// f_c(x) for a generator c, zero below deg c; eigenvalue a^(1 - deg c).
Rational generator_right_value(const HopfAlgebra& alg, const Key& c, const Key& x);

}  // namespace hopfchain
