#include "hopfchain/lyndon.hpp"

#include <map>
#include <stdexcept>

namespace hopfchain {

bool is_lyndon(const Word& w)
{
    if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
        // compare w with its rotation starting at r
        for (std::size_t i = 0; i < n; ++i) {
            const int a = w[i];
            const int b = w[(r + i) % n];
            if (a < b) break;
            if (a > b) return false;
            if (i + 1 == n) return false;  // equal to a rotation
        }
    }
    return true;
}

// Duval
std::vector<Word> lyndon_factorization(const Word& w)
{
    if (w.empty()) throw std::invalid_argument("lyndon_factorization: empty word");
    std::vector<Word> out;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        std::size_t k = i;
        while (j < n && w[k] <= w[j]) {
            k = w[k] < w[j] ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.emplace_back(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + j - k));
            i += j - k;
        }
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& u)
{
    if (u.size() < 2) throw std::invalid_argument("standard_factorization: need at least two letters");
    if (!is_lyndon(u)) throw std::invalid_argument("standard_factorization: word is not Lyndon");
    for (std::size_t cut = 1; cut < u.size(); ++cut) {
        Word tail(u.begin() + static_cast<long>(cut), u.end());
        if (is_lyndon(tail)) return {Word(u.begin(), u.begin() + static_cast<long>(cut)), std::move(tail)};
    }
    throw std::logic_error("standard_factorization: no Lyndon suffix");
}

int lyndon_factor_count(const Word& w)
{
    return static_cast<int>(lyndon_factorization(w).size());
}

long long lyndon_tree_count(const Word& u, const Word& v)
{
    if (u.size() != v.size()) return 0;
    if (u.size() == 1) return u == v ? 1 : 0;
    thread_local std::map<std::pair<Word, Word>, long long> memo;
    const auto key = std::make_pair(u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto [u1, u2] = standard_factorization(u);
    const auto a = static_cast<long>(u1.size());
    const auto b = static_cast<long>(u2.size());
    const Word v_head_a(v.begin(), v.begin() + a), v_tail_a(v.begin() + a, v.end());
    const Word v_head_b(v.begin(), v.begin() + b), v_tail_b(v.begin() + b, v.end());
    long long out = 0;
    if (const long long x = lyndon_tree_count(u1, v_head_a)) out += x * lyndon_tree_count(u2, v_tail_a);
    if (const long long x = lyndon_tree_count(u2, v_head_b)) out -= x * lyndon_tree_count(u1, v_tail_b);
    memo.emplace(key, out);
    return out;
}

Rational shuffle_right_eigenfunction(const Word& w_prime, const Word& w)
{
    if (w_prime.size() != w.size()) return 0;
    if (w.empty()) return 1;
    Word a = w_prime, b = w;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return 0;

    const auto factors = lyndon_factorization(w_prime);
    const std::size_t k = factors.size();
    if (k > 20) throw std::invalid_argument("shuffle_right_eigenfunction: too many Lyndon factors");
    std::vector<std::size_t> prefix_len(1u << k, 0);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        const unsigned low = mask & (~mask + 1);
        const auto idx = static_cast<std::size_t>(__builtin_ctz(low));
        prefix_len[mask] = prefix_len[mask ^ low] + factors[idx].size();
    }
    // dp over the set of trees already placed, left to right
    std::vector<Integer> dp(1u << k);
    dp[0] = 1;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (dp[mask] == 0) continue;
        const auto pos = static_cast<long>(prefix_len[mask]);
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1u) continue;
            const auto len = static_cast<long>(factors[i].size());
            const Word seg(w.begin() + pos, w.begin() + pos + len);
            const long long c = lyndon_tree_count(factors[i], seg);
            if (c) dp[mask | (1u << i)] += dp[mask] * c;
        }
    }
    const Integer denom = factorial(static_cast<int>(k)) * stabilizer_size(factors);
    return Rational(dp[(1u << k) - 1], denom);
}

Composition descent_composition(const Word& w)
{
    if (w.empty()) throw std::invalid_argument("descent_composition: empty word");
    Composition out;
    int run = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i - 1] > w[i]) {
            out.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    out.push_back(run);
    return out;
}

std::vector<Word> lyndon_words_of_multidegree(const std::vector<int>& nu)
{
    std::vector<Word> out;
    for (auto& w : words_of_multidegree(nu))
        if (!w.empty() && is_lyndon(w)) out.push_back(std::move(w));
    return out;
}

}  // namespace hopfchain
