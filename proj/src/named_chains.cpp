#include "hopfchain/named_chains.hpp"

#include "hopfchain/hopf.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hopfchain {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void require_same_size(const std::vector<int>& x, const std::vector<int>& y, const char* who)
{
    if (total(x) != total(y)) throw std::invalid_argument(std::string(who) + ": size mismatch");
}

// Every way to split the multiset `pool` (value -> count) into a tuple of
// partitions with the given sizes; calls visit with the tuple.
void split_multiset(std::map<int, int>& pool, const std::vector<int>& sizes, std::size_t j,
                    std::vector<Partition>& tuple, const std::function<void(const std::vector<Partition>&)>& visit)
{
    if (j == sizes.size()) {
        for (const auto& [v, c] : pool)
            if (c != 0) return;
        visit(tuple);
        return;
    }
    std::vector<int> values;
    for (const auto& [v, c] : pool)
        if (c > 0) values.push_back(v);
    std::sort(values.rbegin(), values.rend());
    Partition current;
    std::function<void(std::size_t, int)> choose = [&](std::size_t vi, int remaining) {
        if (remaining == 0) {
            tuple.push_back(current);
            split_multiset(pool, sizes, j + 1, tuple, visit);
            tuple.pop_back();
            return;
        }
        if (vi == values.size()) return;
        const int v = values[vi];
        int& avail = pool[v];
        const int limit = std::min(avail, remaining / v);
        for (int k = limit; k >= 0; --k) {
            for (int t = 0; t < k; ++t) current.push_back(v);
            avail -= k;
            choose(vi + 1, remaining - k * v);
            avail += k;
            current.resize(current.size() - static_cast<std::size_t>(k));
        }
    };
    choose(0, sizes[j]);
}

void for_each_split(const Partition& parts, const Partition& sizes,
                    const std::function<void(const std::vector<Partition>&)>& visit)
{
    std::map<int, int> pool;
    for (int p : parts) ++pool[p];
    std::vector<Partition> tuple;
    split_multiset(pool, sizes, 0, tuple, visit);
}

// Copies of C rooted at each vertex of T, as vertex sets.
std::vector<std::vector<int>> tree_copies(const Key& C, const Key& T)
{
    const auto ts = forest_shape(T);
    const int k = C.degree;
    std::vector<std::vector<int>> out;
    std::vector<bool> keep(static_cast<std::size_t>(ts.size()), false);
    std::vector<int> chosen;
    for (int root = 0; root < ts.size(); ++root) {
        // descendants of root in preorder are root+1 .. root+desc-1
        const int end = root + ts.desc[static_cast<std::size_t>(root)];
        std::function<void(int)> rec = [&](int v) {
            if (static_cast<int>(chosen.size()) == k) {
                if (forest_from_parents(ts.parent, keep) == C) out.push_back(chosen);
                return;
            }
            if (v == end) return;
            if (end - v < k - static_cast<int>(chosen.size())) return;
            if (keep[static_cast<std::size_t>(ts.parent[static_cast<std::size_t>(v)])]) {
                keep[static_cast<std::size_t>(v)] = true;
                chosen.push_back(v);
                rec(v + 1);
                chosen.pop_back();
                keep[static_cast<std::size_t>(v)] = false;
            }
            rec(v + 1);
        };
        keep[static_cast<std::size_t>(root)] = true;
        chosen.push_back(root);
        rec(root + 1);
        chosen.pop_back();
        keep[static_cast<std::size_t>(root)] = false;
    }
    return out;
}

void require_tree(const Key& t, const char* who)
{
    if (t.kind != KeyKind::forest || forest_trees(t).size() != 1) throw std::invalid_argument(std::string(who) + ": expected a single tree");
}

int count_triples(const Word& w, const std::function<bool(int, int, int)>& pred)
{
    int c = 0;
    for (std::size_t i = 2; i < w.size(); ++i)
        if (pred(w[i - 2], w[i - 1], w[i])) ++c;
    return c;
}

}  // namespace

Rational rock_f(const Partition& mu, const Partition& lambda)
{
    require_same_size(mu, lambda, "rock_f");
    Rational sum = 0;
    for_each_split(mu, lambda, [&](const std::vector<Partition>& tuple) {
        Rational term = 1;
        for (const auto& p : tuple) term /= Rational(stabilizer_size(p));
        sum += term;
    });
    return sum / Rational(multinomial(lambda));
}

Rational rock_g(const Partition& mu, const Partition& lambda)
{
    require_same_size(mu, lambda, "rock_g");
    Rational sum = 0;
    for_each_split(lambda, mu, [&](const std::vector<Partition>& tuple) {
        Rational term = 1;
        for (const auto& p : tuple) term *= Rational(factorial(static_cast<int>(p.size()) - 1)) / Rational(stabilizer_size(p));
        sum += term;
    });
    const int sign = (mu.size() + lambda.size()) % 2 == 0 ? 1 : -1;
    return sign * Rational(multinomial(lambda)) * sum;
}

Rational rock_expectation_bound(const Partition& lambda, int j, int a, int m)
{
    if (j < 1) throw std::invalid_argument("rock_expectation_bound: j must be positive");
    Rational s = 0;
    for (int part : lambda) s += Rational(binomial(part, j));
    return s * rational_pow(Rational(a), (1 - j) * m);
}

Integer tree_factorial(const Key& tree)
{
    require_tree(tree, "tree_factorial");
    Integer p = 1;
    for (int d : forest_shape(tree).desc) p *= d;
    return p;
}

std::size_t tree_copy_count(const Key& C, const Key& T)
{
    require_tree(C, "tree_copy_count");
    return tree_copies(C, T).size();
}

Rational tree_fC(const Key& C, const Key& T)
{
    require_tree(C, "tree_fC");
    if (C.degree < 2) throw std::invalid_argument("tree_fC: C must have at least two vertices");
    const auto ts = forest_shape(T);
    const int k = C.degree;
    Rational sum = 0;
    for (const auto& copy : tree_copies(C, T)) {
        Rational term = 1;
        for (int v = copy.front(); v >= 0; v = ts.parent[static_cast<std::size_t>(v)]) {
            const int d = ts.desc[static_cast<std::size_t>(v)];
            term *= Rational(d) / Rational(d - k + 1);
        }
        for (std::size_t i = 1; i < copy.size(); ++i) term *= ts.desc[static_cast<std::size_t>(copy[i])];
        sum += term;
    }
    return sum / Rational(factorial(k));
}

RationalInterval tree_fC_bounds(const Key& C, const Key& T)
{
    require_tree(C, "tree_fC_bounds");
    const int k = C.degree;
    const Rational copies(static_cast<long long>(tree_copy_count(C, T)));
    int largest = 0;
    for (const Key& t : forest_trees(T)) largest = std::max(largest, t.degree);
    RationalInterval r;
    r.lower = Rational(tree_factorial(C)) * copies / (Rational(factorial(k)) * k);
    r.upper = largest < k ? Rational(0) : Rational(binomial(largest, k)) * copies / Rational(largest - k + 1);
    return r;
}

Rational tree_copy_bound(const Key& C, const Key& T, int a, int m)
{
    const int k = C.degree;
    return rational_pow(Rational(a), (1 - k) * m) * Rational(factorial(k)) * k / Rational(tree_factorial(C)) * tree_fC(C, T);
}

ShuffleStatistic parse_shuffle_statistic(const std::string& name)
{
    if (name == "descents") return ShuffleStatistic::descents;
    if (name == "peaks_minus_valleys") return ShuffleStatistic::peaks_minus_valleys;
    if (name == "inversions_left") return ShuffleStatistic::inversions_left;
    if (name == "pattern") return ShuffleStatistic::pattern;
    throw std::invalid_argument("unknown shuffle statistic \"" + name + "\"");
}

Rational shuffle_statistic_eigenfunction(ShuffleStatistic kind, const Word& w, const Word& pattern)
{
    switch (kind) {
    case ShuffleStatistic::descents:
        return Rational(ascents(w) - descents(w));
    case ShuffleStatistic::peaks_minus_valleys:
        return Rational(peaks(w) - valleys(w));
    case ShuffleStatistic::inversions_left: {
        const int n = static_cast<int>(w.size());
        Rational same = 0;
        for (int c : multidegree_of(w)) same += Rational(binomial(c, 2));
        return Rational(binomial(n, 2)) / 2 - same / 2 - inversions(w);
    }
    case ShuffleStatistic::pattern: {
        if (pattern.empty()) throw std::invalid_argument("pattern statistic needs a nonempty word");
        Rational s = 0;
        for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i)
            s += shuffle_right_eigenfunction(pattern, Word(w.begin() + static_cast<long>(i),
                                                           w.begin() + static_cast<long>(i + pattern.size())));
        return s;
    }
    }
    throw std::invalid_argument("unknown shuffle statistic");
}

int shuffle_statistic_decay(ShuffleStatistic kind, const Word& pattern)
{
    switch (kind) {
    case ShuffleStatistic::descents:
    case ShuffleStatistic::inversions_left:
        return 1;
    case ShuffleStatistic::peaks_minus_valleys:
        return 2;
    case ShuffleStatistic::pattern:
        if (pattern.empty()) throw std::invalid_argument("pattern statistic needs a nonempty word");
        return static_cast<int>(pattern.size()) - 1;
    }
    throw std::invalid_argument("unknown shuffle statistic");
}

int ascents(const Word& w)
{
    int c = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) ++c;
    return c;
}

int descents(const Word& w)
{
    int c = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) ++c;
    return c;
}

int peaks(const Word& w)
{
    return count_triples(w, [](int x, int y, int z) { return x < y && y > z; });
}

int valleys(const Word& w)
{
    return count_triples(w, [](int x, int y, int z) { return x > y && y < z; });
}

int double_ascents(const Word& w)
{
    return count_triples(w, [](int x, int y, int z) { return x < y && y < z; });
}

int double_descents(const Word& w)
{
    return count_triples(w, [](int x, int y, int z) { return x > y && y > z; });
}

int inversions(const Word& w)
{
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++c;
    return c;
}

Rational expected_descents(int n, int a, int m)
{
    return (1 - rational_pow(Rational(a), -m)) * Rational(n - 1) / 2;
}

Rational expected_peaks(int n, int a, int m)
{
    return (1 - rational_pow(Rational(a), -2 * m)) * Rational(n - 2) / 3;
}

Rational qsym_right_f(const Composition& I, const Composition& J)
{
    require_same_size(I, J, "qsym_right_f");
    Rational sum = 0;
    for (const auto& rearranged : rearrangements(I)) {
        const Rational fsh = shuffle_right_eigenfunction(I, rearranged);
        if (fsh == 0) continue;
        Rational prod = 1;
        for (const auto& piece : relative_decomposition(J, rearranged)) {
            const int len = static_cast<int>(piece.size());
            const int sign = len % 2 == 1 ? 1 : -1;
            prod *= Rational(sign) / Rational(binomial(total(piece) - 1, len - 1));
        }
        sum += fsh * prod;
    }
    Integer parts = 1;
    for (int i : I) parts *= i;
    return sum / Rational(parts);
}

Integer ribbon_character(const Composition& J, const Partition& lambda)
{
    require_same_size(J, lambda, "ribbon_character");
    const int n = total(J);
    std::vector<bool> row_break(static_cast<std::size_t>(n) + 1, false);
    for (int d : division_points(J)) row_break[static_cast<std::size_t>(d)] = true;

    std::vector<int> order(lambda.size());
    std::iota(order.begin(), order.end(), 0);
    Integer chi = 0;
    do {
        // block r holds lambda[order[r]] copies of the value order[r]
        bool ok = true;
        int crossings = 0;
        int pos = 0;
        for (std::size_t r = 0; r < order.size() && ok; ++r) {
            const int len = lambda[static_cast<std::size_t>(order[r])];
            if (r > 0) {
                const bool up = order[r] > order[r - 1];
                ok = row_break[static_cast<std::size_t>(pos)] ? !up : up;
            }
            for (int p = pos + 1; p < pos + len; ++p)
                if (row_break[static_cast<std::size_t>(p)]) ++crossings;
            pos += len;
        }
        if (ok) chi += crossings % 2 == 0 ? 1 : -1;
    } while (std::next_permutation(order.begin(), order.end()));
    return chi;
}

Rational qsym_left_g(const Composition& I, const Composition& J)
{
    require_same_size(I, J, "qsym_left_g");
    if (std::is_sorted(I.rbegin(), I.rend())) return Rational(ribbon_character(J, I));
    const auto alg = get_instance("qsym_F");
    std::vector<LinComb> factors;
    for (const auto& u : lyndon_factorization(I)) factors.push_back(eulerian_idempotent(*alg, qsym_P(u)));
    return iterated_product(*alg, factors).coeff(composition_key(J));
}

Rational descent_probability_from_identity(int n, int a, int m, const Composition& J)
{
    if (total(J) != n) throw std::invalid_argument("descent_probability_from_identity: |J| != n");
    if (a < 1 || m < 0) throw std::invalid_argument("descent_probability_from_identity: need a >= 1, m >= 0");
    Rational p = 0;
    for (const auto& lambda : partitions_of(n)) {
        Integer z = stabilizer_size(lambda);
        for (int part : lambda) z *= part;
        p += rational_pow(Rational(a), m * (static_cast<int>(lambda.size()) - n)) * Rational(ribbon_character(J, lambda)) /
             Rational(z);
    }
    return p;
}

std::vector<Key> rock_table_order(int n)
{
    std::vector<Key> out;
    for (auto& p : partitions_of(n)) out.push_back(partition_key(std::move(p)));
    return out;
}

std::vector<Key> schur_table_order(int n)
{
    if (n == 3) return {schur_key({3}), schur_key({1, 1, 1}), schur_key({2, 1})};
    std::vector<Key> out;
    for (auto& p : partitions_of(n)) out.push_back(schur_key(std::move(p)));
    return out;
}

std::vector<Key> qsym_table_order(int n)
{
    if (n == 4)
        return {composition_key({4}),       composition_key({1, 3}),    composition_key({3, 1}),
                composition_key({2, 2}),    composition_key({1, 2, 1}), composition_key({2, 1, 1}),
                composition_key({1, 1, 2}), composition_key({1, 1, 1, 1})};
    return get_instance("qsym_F")->basis(n);
}

}  // namespace hopfchain
