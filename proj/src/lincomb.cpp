#include "hopfchain/lincomb.hpp"

#include <stdexcept>

namespace hopfchain {

LinComb::LinComb(const Key& k, const Rational& c)
{
    add(k, c);
}

void LinComb::add(const Key& k, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational LinComb::coeff(const Key& k) const
{
    const auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

LinComb& LinComb::operator+=(const LinComb& other)
{
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& other)
{
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
}

LinComb& LinComb::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

LinComb lincomb_axpy(const Rational& alpha, const LinComb& x, const LinComb& y)
{
    LinComb out = y;
    if (alpha == 0) return out;
    for (const auto& [k, c] : x) out.add(k, alpha * c);
    return out;
}

std::string to_string(const LinComb& v)
{
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : v) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*" + to_string(k);
    }
    return out;
}

void TensorComb::add(const Tuple& t, const Rational& c)
{
    if (static_cast<int>(t.size()) != arity_) throw std::invalid_argument("tensor arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational TensorComb::coeff(const Tuple& t) const
{
    const auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

TensorComb& TensorComb::operator+=(const TensorComb& other)
{
    if (other.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

TensorComb tensor_merge(const std::vector<TensorComb>& parts)
{
    TensorComb acc(0);
    acc.add({}, 1);
    for (const auto& part : parts) {
        TensorComb next(acc.arity() + part.arity());
        for (const auto& [t1, c1] : acc)
            for (const auto& [t2, c2] : part) {
                TensorComb::Tuple t = t1;
                t.insert(t.end(), t2.begin(), t2.end());
                next.add(t, c1 * c2);
            }
        acc = std::move(next);
    }
    return acc;
}

std::string to_string(const TensorComb& t)
{
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [tuple, c] : t) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) out += "|";
            out += to_string(tuple[i]);
        }
    }
    return out;
}

}  // namespace hopfchain
