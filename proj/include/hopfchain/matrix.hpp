#pragma once

#include "hopfchain/key.hpp"
#include "hopfchain/lincomb.hpp"
#include "hopfchain/rational.hpp"

#include <vector>

namespace hopfchain {

using RationalVector = std::vector<Rational>;

// Dense exact matrix indexed by ordered bases.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::vector<Key> rows, std::vector<Key> cols);

    std::size_t rows() const { return row_basis_.size(); }
    std::size_t cols() const { return col_basis_.size(); }
    const std::vector<Key>& row_basis() const { return row_basis_; }
    const std::vector<Key>& col_basis() const { return col_basis_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i][j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const RationalVector& row(std::size_t i) const { return entries_[i]; }
    RationalVector column(std::size_t j) const;

    std::size_t row_index(const Key& k) const;  // throws when absent
    std::size_t col_index(const Key& k) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::vector<Key> row_basis_;
    std::vector<Key> col_basis_;
    std::vector<RationalVector> entries_;
};

ExactMatrix identity_matrix(const std::vector<Key>& basis);
ExactMatrix transpose(const ExactMatrix& m);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const Rational& c, ExactMatrix m);
ExactMatrix matrix_power(const ExactMatrix& m, int exponent);
ExactMatrix inverse(const ExactMatrix& m);  // throws std::domain_error when singular

// M v, with v indexed by the column basis
RationalVector matrix_apply(const ExactMatrix& m, const RationalVector& v);
// v M, with v indexed by the row basis
RationalVector vector_times(const RationalVector& v, const ExactMatrix& m);

std::size_t rank(std::vector<RationalVector> rows);
std::size_t rank_of(const std::vector<LinComb>& vectors);

RationalVector coordinates(const LinComb& v, const std::vector<Key>& basis);

}  // namespace hopfchain
