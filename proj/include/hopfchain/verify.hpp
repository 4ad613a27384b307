#pragma once

#include "hopfchain/hopf.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hopfchain {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

// Runs body, turning exceptions into failures and timing it. body returns an
// empty string on success, else a description of the first failure.
CheckResult run_check(std::string name, const std::function<std::string()>& body);

// Plain degrees {n}, or every composition of n as a multidegree for the word
// algebras.
std::vector<std::vector<int>> degrees_of(const HopfAlgebra& alg, int n);
// All basis elements of total degree n, with letters 1..k for word algebras.
std::vector<Key> basis_up_to_relabelling(const HopfAlgebra& alg, int n);

// Counit, coassociativity, associativity, compatibility of product and
// coproduct, grading, and the (co)commutativity flags.
std::string hopf_axiom_failure(const HopfAlgebra& alg, int n);
// Psi^2 Psi^3 = Psi^6 on degree n.
std::string power_rule_failure(const HopfAlgebra& alg, int n);
// Rows of K sum to one, entries are nonnegative, and on free-commutative
// bases every move increases the number of factors or stays put.
std::string chain_rows_failure(const HopfAlgebra& alg, const std::vector<int>& degree, int a);
// Psi^2 eigenvectors from every applicable algorithm, left and right
// eigenfunctions, biorthogonality and the spectral expansion of K^2.
std::string eigen_failure(const HopfAlgebra& alg, const std::vector<int>& degree);
// pi K = pi for every stationary distribution.
std::string stationary_failure(const HopfAlgebra& alg, const std::vector<int>& degree);
// Des: Sh_(1^n) -> QSym_n satisfies Dynkin's criterion.
std::string descent_lumping_failure(int n, int a);
// Closed-form eigenfunctions against the chains: rocks, trees, descent sets, shuffles.
std::string named_failure(int n);

std::vector<std::string> verification_suites();  // hopf, power, chains, eigen, stationary, lumping, named
// suite "all" runs every suite. Throws std::invalid_argument on unknown suites.
std::vector<CheckResult> run_verification(const std::string& suite, int max_degree,
                                          const std::function<void(const CheckResult&)>& progress = {});

}  // namespace hopfchain
