#pragma once

#include "hopfchain/key.hpp"
#include "hopfchain/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfchain {

// Finite rational combination of basis keys. Zero coefficients are never stored.
class LinComb {
public:
    using Map = std::map<Key, Rational>;

    LinComb() = default;
    explicit LinComb(const Key& k, const Rational& c = Rational(1));

    void add(const Key& k, const Rational& c);
    Rational coeff(const Key& k) const;

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    Map::const_iterator begin() const { return terms_.begin(); }
    Map::const_iterator end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& other);
    LinComb& operator-=(const LinComb& other);
    LinComb& operator*=(const Rational& c);

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    Map terms_;
};

// alpha * x + y
LinComb lincomb_axpy(const Rational& alpha, const LinComb& x, const LinComb& y);

std::string to_string(const LinComb& v);

// Tensor of basis keys with fixed arity. Zero coefficients are never stored.
class TensorComb {
public:
    using Tuple = std::vector<Key>;
    using Map = std::map<Tuple, Rational>;

    explicit TensorComb(int arity = 1) : arity_(arity) {}

    int arity() const { return arity_; }
    void add(const Tuple& t, const Rational& c);
    Rational coeff(const Tuple& t) const;

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    Map::const_iterator begin() const { return terms_.begin(); }
    Map::const_iterator end() const { return terms_.end(); }

    TensorComb& operator+=(const TensorComb& other);
    friend bool operator==(const TensorComb&, const TensorComb&) = default;

private:
    int arity_;
    Map terms_;
};

// Distributive tensor product; tuples are concatenated, arities add.
TensorComb tensor_merge(const std::vector<TensorComb>& parts);

std::string to_string(const TensorComb& t);

}  // namespace hopfchain
