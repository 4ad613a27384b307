#include "hopfchain/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hopfchain {

ExactMatrix::ExactMatrix(std::vector<Key> rows, std::vector<Key> cols)
    : row_basis_(std::move(rows)),
      col_basis_(std::move(cols)),
      entries_(row_basis_.size(), RationalVector(col_basis_.size()))
{
}

RationalVector ExactMatrix::column(std::size_t j) const
{
    RationalVector out;
    out.reserve(rows());
    for (const auto& r : entries_) out.push_back(r[j]);
    return out;
}

std::size_t ExactMatrix::row_index(const Key& k) const
{
    const auto it = std::find(row_basis_.begin(), row_basis_.end(), k);
    if (it == row_basis_.end()) throw std::out_of_range("key not in row basis: " + to_string(k));
    return static_cast<std::size_t>(it - row_basis_.begin());
}

std::size_t ExactMatrix::col_index(const Key& k) const
{
    const auto it = std::find(col_basis_.begin(), col_basis_.end(), k);
    if (it == col_basis_.end()) throw std::out_of_range("key not in column basis: " + to_string(k));
    return static_cast<std::size_t>(it - col_basis_.begin());
}

ExactMatrix identity_matrix(const std::vector<Key>& basis)
{
    ExactMatrix m(basis, basis);
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, i) = 1;
    return m;
}

ExactMatrix transpose(const ExactMatrix& m)
{
    ExactMatrix t(m.col_basis(), m.row_basis());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
    ExactMatrix out(a.row_basis(), b.col_basis());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) out(i, j) += x * b(k, j);
        }
    return out;
}

ExactMatrix operator*(const Rational& c, ExactMatrix m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= c;
    return m;
}

ExactMatrix matrix_power(const ExactMatrix& m, int exponent)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("power of non-square matrix");
    if (exponent < 0) return matrix_power(inverse(m), -exponent);
    ExactMatrix out = identity_matrix(m.row_basis());
    ExactMatrix base = m;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
    }
    return out;
}

ExactMatrix inverse(const ExactMatrix& m)
{
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::vector<RationalVector> a(n, RationalVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[piv], a[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    ExactMatrix out(m.col_basis(), m.row_basis());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a[i][n + j];
    return out;
}

RationalVector matrix_apply(const ExactMatrix& m, const RationalVector& v)
{
    if (v.size() != m.cols()) throw std::invalid_argument("matrix_apply: dimension mismatch");
    RationalVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out[i] += m(i, j) * v[j];
    return out;
}

RationalVector vector_times(const RationalVector& v, const ExactMatrix& m)
{
    if (v.size() != m.rows()) throw std::invalid_argument("vector_times: dimension mismatch");
    RationalVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out[j] += v[i] * m(i, j);
    }
    return out;
}

std::size_t rank(std::vector<RationalVector> rows)
{
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rank_of(const std::vector<LinComb>& vectors)
{
    std::set<Key> support;
    for (const auto& v : vectors)
        for (const auto& [k, c] : v) support.insert(k);
    const std::vector<Key> basis(support.begin(), support.end());
    std::vector<RationalVector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(coordinates(v, basis));
    return rank(std::move(rows));
}

RationalVector coordinates(const LinComb& v, const std::vector<Key>& basis)
{
    RationalVector out(basis.size());
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out[i] = v.coeff(basis[i]);
        if (out[i] != 0) ++found;
    }
    if (found != v.size()) throw std::invalid_argument("vector has support outside the basis");
    return out;
}

}  // namespace hopfchain
