#include "instances_internal.hpp"

#include "hopfchain/combinatorics.hpp"

#include <stdexcept>

namespace hopfchain::detail {

namespace {

std::vector<Key> word_basis(const std::vector<int>& nu)
{
    std::vector<Key> out;
    for (auto& w : words_of_multidegree(nu)) out.push_back(word_key(std::move(w)));
    return out;
}

TensorComb deconcatenate(const Key& x)
{
    TensorComb out(2);
    const auto& w = x.data;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.add({word_key({w.begin(), w.begin() + static_cast<long>(i)}), word_key({w.begin() + static_cast<long>(i), w.end()})}, 1);
    return out;
}

class WordAlgebra : public HopfAlgebra {
public:
    Key unit() const override { return word_key({}); }
    bool has_multidegree() const override { return true; }
    std::vector<int> multidegree(const Key& k) const override { return multidegree_of(k.data); }
    std::vector<Key> basis_multi(const std::vector<int>& nu) const override { return word_basis(nu); }
    std::vector<Key> basis(int n) const override
    {
        throw std::domain_error(name() + ": degree " + std::to_string(n) +
                                " is a disconnected state space; give a multidegree");
    }
};

class Shuffle final : public WordAlgebra {
public:
    std::string name() const override { return "shuffle"; }
    bool is_commutative() const override { return true; }
    bool is_cocommutative() const override { return false; }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override
    {
        LinComb out;
        for (auto& [w, c] : shuffles(a.data, b.data)) out.add(word_key(w), c);
        return out;
    }
    TensorComb compute_coproduct(const Key& x) const override { return deconcatenate(x); }
};

class FreeAssoc final : public WordAlgebra {
public:
    std::string name() const override { return "free_assoc"; }
    bool is_commutative() const override { return false; }
    bool is_cocommutative() const override { return true; }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override
    {
        Word w = a.data;
        w.insert(w.end(), b.data.begin(), b.data.end());
        return LinComb(word_key(std::move(w)));
    }
    TensorComb compute_coproduct(const Key& x) const override
    {
        TensorComb out(2);
        const auto& w = x.data;
        const std::size_t n = w.size();
        if (n > 20) throw std::invalid_argument("free_assoc: word too long");
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Word left, right;
            for (std::size_t i = 0; i < n; ++i) (mask >> i & 1u ? left : right).push_back(w[i]);
            out.add({word_key(std::move(left)), word_key(std::move(right))}, 1);
        }
        return out;
    }
};

class NSym final : public HopfAlgebra {
public:
    std::string name() const override { return "nsym"; }
    bool is_commutative() const override { return false; }
    bool is_cocommutative() const override { return true; }
    Key unit() const override { return s_word_key({}); }
    std::vector<Key> basis(int n) const override
    {
        std::vector<Key> out;
        for (auto& c : compositions_of(n)) out.push_back(s_word_key(std::move(c)));
        return out;
    }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override
    {
        Word w = a.data;
        w.insert(w.end(), b.data.begin(), b.data.end());
        return LinComb(s_word_key(std::move(w)));
    }
    TensorComb compute_coproduct(const Key& x) const override
    {
        std::map<std::pair<Word, Word>, int> acc{{{}, 1}};
        for (int letter : x.data) {
            std::map<std::pair<Word, Word>, int> next;
            for (const auto& [lr, c] : acc)
                for (int i = 0; i <= letter; ++i) {
                    auto [l, r] = lr;
                    if (i > 0) l.push_back(i);
                    if (letter - i > 0) r.push_back(letter - i);
                    next[{l, r}] += c;
                }
            acc = std::move(next);
        }
        TensorComb out(2);
        for (const auto& [lr, c] : acc) out.add({s_word_key(lr.first), s_word_key(lr.second)}, c);
        return out;
    }
};

}  // namespace

std::shared_ptr<const HopfAlgebra> make_shuffle() { return std::make_shared<Shuffle>(); }
std::shared_ptr<const HopfAlgebra> make_free_assoc() { return std::make_shared<FreeAssoc>(); }
std::shared_ptr<const HopfAlgebra> make_nsym() { return std::make_shared<NSym>(); }

}  // namespace hopfchain::detail
