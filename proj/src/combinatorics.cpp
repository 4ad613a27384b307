#include "hopfchain/combinatorics.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hopfchain {

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n)
{
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> div;
        for (int i = 1; i < n; ++i)
            if (mask >> (i - 1) & 1u) div.push_back(i);
        out.push_back(composition_from_divisions(n, div));
    }
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<int> division_points(const Composition& c)
{
    std::vector<int> out;
    int s = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        s += c[i];
        out.push_back(s);
    }
    return out;
}

Composition composition_from_divisions(int n, const std::vector<int>& divisions)
{
    Composition out;
    int prev = 0;
    for (int d : divisions) {
        if (d <= prev || d >= n) throw std::invalid_argument("bad division points");
        out.push_back(d - prev);
        prev = d;
    }
    if (n > 0) out.push_back(n - prev);
    return out;
}

bool refines(const Composition& finer, const Composition& coarser)
{
    const int n1 = std::accumulate(finer.begin(), finer.end(), 0);
    const int n2 = std::accumulate(coarser.begin(), coarser.end(), 0);
    if (n1 != n2) return false;
    const auto df = division_points(finer);
    const std::set<int> fine(df.begin(), df.end());
    for (int d : division_points(coarser))
        if (!fine.count(d)) return false;
    return true;
}

namespace {

std::vector<Composition> subsets_of_divisions(const Composition& c, bool add)
{
    const int n = std::accumulate(c.begin(), c.end(), 0);
    const auto own = division_points(c);
    std::vector<int> free;
    if (add) {
        const std::set<int> have(own.begin(), own.end());
        for (int i = 1; i < n; ++i)
            if (!have.count(i)) free.push_back(i);
    } else {
        free = own;
    }
    std::vector<Composition> out;
    for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
        std::set<int> div;
        if (add) div.insert(own.begin(), own.end());
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask >> i & 1u) div.insert(free[i]);
        out.push_back(composition_from_divisions(n, std::vector<int>(div.begin(), div.end())));
    }
    return out;
}

}  // namespace

std::vector<Composition> refinements_of(const Composition& c)
{
    return subsets_of_divisions(c, true);
}

std::vector<Composition> coarsenings_of(const Composition& c)
{
    return subsets_of_divisions(c, false);
}

std::vector<Composition> relative_decomposition(const Composition& j, const Composition& i)
{
    const int n = std::accumulate(j.begin(), j.end(), 0);
    if (n != std::accumulate(i.begin(), i.end(), 0)) throw std::invalid_argument("relative decomposition: size mismatch");
    const auto jd = division_points(j);
    const std::set<int> jdiv(jd.begin(), jd.end());
    std::vector<Composition> out;
    int start = 0;
    for (int part : i) {
        std::vector<int> local;
        for (int d = start + 1; d < start + part; ++d)
            if (jdiv.count(d)) local.push_back(d - start);
        out.push_back(composition_from_divisions(part, local));
        start += part;
    }
    return out;
}

std::vector<Word> rearrangements(Word letters)
{
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<Word> words_of_multidegree(const std::vector<int>& nu)
{
    Word letters;
    for (std::size_t i = 0; i < nu.size(); ++i)
        for (int r = 0; r < nu[i]; ++r) letters.push_back(static_cast<int>(i) + 1);
    return rearrangements(letters);
}

std::vector<int> multidegree_of(const Word& w)
{
    std::vector<int> nu;
    for (int x : w) {
        if (x <= 0) throw std::invalid_argument("letters must be positive");
        if (static_cast<int>(nu.size()) < x) nu.resize(x, 0);
        ++nu[x - 1];
    }
    return nu;
}

std::map<Word, int> shuffles(const Word& u, const Word& v)
{
    std::map<Word, int> out;
    Word cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == u.size() && j == v.size()) {
            ++out[cur];
            return;
        }
        if (i < u.size()) {
            cur.push_back(u[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < v.size()) {
            cur.push_back(v[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<std::vector<int>> multisets_with_degree(const std::vector<int>& item_degree, int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t first, int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = first; i < item_degree.size(); ++i) {
            if (item_degree[i] <= 0 || item_degree[i] > remaining) continue;
            cur.push_back(static_cast<int>(i));
            rec(i, remaining - item_degree[i]);
            cur.pop_back();
        }
    };
    rec(0, n);
    return out;
}

}  // namespace hopfchain
