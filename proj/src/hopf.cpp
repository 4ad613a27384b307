#include "hopfchain/hopf.hpp"

#include "hopfchain/lyndon.hpp"
#include "hopfchain/matrix.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace hopfchain {

std::vector<Key> HopfAlgebra::basis_multi(const std::vector<int>& nu) const
{
    if (nu.size() != 1) throw std::invalid_argument(name() + " has no multidegree grading");
    return basis(nu[0]);
}

std::vector<Key> HopfAlgebra::factorize(const Key&) const
{
    throw std::logic_error(name() + " has no free-commutative basis");
}

std::vector<Key> HopfAlgebra::generators(int) const
{
    throw std::logic_error(name() + " exposes no free generators");
}

template <class Map, class K, class F>
const typename Map::mapped_type& HopfAlgebra::memo(Map& m, const K& key, F&& compute) const
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = m.find(key); it != m.end()) return it->second;
    }
    auto value = compute();
    std::lock_guard lock(mutex_);
    return m.try_emplace(key, std::move(value)).first->second;
}

const LinComb& HopfAlgebra::product(const Key& a, const Key& b) const
{
    return memo(product_memo_, std::make_pair(a, b), [&] {
        if (is_unit(a)) return LinComb(b);
        if (is_unit(b)) return LinComb(a);
        return compute_product(a, b);
    });
}

const TensorComb& HopfAlgebra::coproduct(const Key& x) const
{
    return memo(coproduct_memo_, x, [&] {
        if (is_unit(x)) {
            TensorComb t(2);
            t.add({x, x}, 1);
            return t;
        }
        return compute_coproduct(x);
    });
}

const TensorComb& HopfAlgebra::iterated_coproduct(int a, const Key& x) const
{
    if (a < 1) throw std::invalid_argument("iterated_coproduct: arity must be positive");
    if (a == 2) return coproduct(x);
    return memo(iterated_memo_, std::make_pair(a, x), [&] {
        TensorComb out(a);
        if (a == 1) {
            out.add({x}, 1);
            return out;
        }
        for (const auto& [t, c] : iterated_coproduct(a - 1, x)) {
            for (const auto& [pair, c2] : coproduct(t.back())) {
                TensorComb::Tuple tt(t.begin(), t.end() - 1);
                tt.push_back(pair[0]);
                tt.push_back(pair[1]);
                out.add(tt, c * c2);
            }
        }
        return out;
    });
}

const TensorComb& HopfAlgebra::reduced_coproduct(int r, const Key& x) const
{
    if (r < 1) throw std::invalid_argument("reduced_coproduct: arity must be positive");
    return memo(reduced_memo_, std::make_pair(r, x), [&] {
        TensorComb out(r);
        if (x.degree < r) return out;
        if (r == 1) {
            out.add({x}, 1);
            return out;
        }
        for (const auto& [t, c] : reduced_coproduct(r - 1, x)) {
            for (const auto& [pair, c2] : coproduct(t.back())) {
                if (pair[0].degree == 0 || pair[1].degree == 0) continue;
                TensorComb::Tuple tt(t.begin(), t.end() - 1);
                tt.push_back(pair[0]);
                tt.push_back(pair[1]);
                out.add(tt, c * c2);
            }
        }
        return out;
    });
}

const LinComb& HopfAlgebra::hopf_power(int a, const Key& x) const
{
    if (a < 1) throw std::invalid_argument("hopf_power: a must be positive");
    return memo(power_memo_, std::make_pair(a, x), [&] {
        if (a == 1) return LinComb(x);
        return multiply_out(*this, iterated_coproduct(a, x));
    });
}

const LinComb& HopfAlgebra::eulerian(const Key& x) const
{
    return memo(eulerian_memo_, x, [&] {
        LinComb out;
        for (int r = 1; r <= x.degree; ++r) {
            const Rational w = Rational(r % 2 == 1 ? 1 : -1, r);
            out += w * multiply_out(*this, reduced_coproduct(r, x));
        }
        return out;
    });
}

std::vector<Key> basis_of(const HopfAlgebra& alg, const std::vector<int>& degree)
{
    if (alg.has_multidegree()) return alg.basis_multi(degree);
    if (degree.size() != 1) throw std::invalid_argument(alg.name() + " has no multidegree grading");
    return alg.basis(degree[0]);
}

LinComb multiply(const HopfAlgebra& alg, const LinComb& x, const LinComb& y)
{
    LinComb out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y)
            for (const auto& [k, c] : alg.product(k1, k2)) out.add(k, c1 * c2 * c);
    return out;
}

LinComb iterated_product(const HopfAlgebra& alg, const std::vector<Key>& keys)
{
    if (keys.empty()) return LinComb(alg.unit());
    LinComb acc(keys.front());
    for (std::size_t i = 1; i < keys.size(); ++i) {
        if (is_unit(keys[i])) continue;
        if (acc.size() == 1 && acc.begin()->second == 1) {
            acc = alg.product(acc.begin()->first, keys[i]);
            continue;
        }
        acc = multiply(alg, acc, LinComb(keys[i]));
    }
    return acc;
}

LinComb iterated_product(const HopfAlgebra& alg, const std::vector<LinComb>& factors)
{
    if (factors.empty()) return LinComb(alg.unit());
    LinComb acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = multiply(alg, acc, factors[i]);
    return acc;
}

LinComb multiply_out(const HopfAlgebra& alg, const TensorComb& t)
{
    LinComb out;
    for (const auto& [tuple, c] : t) out += c * iterated_product(alg, tuple);
    return out;
}

TensorComb iterated_coproduct(const HopfAlgebra& alg, int a, const LinComb& x)
{
    TensorComb out(a);
    for (const auto& [k, c] : x)
        for (const auto& [t, c2] : alg.iterated_coproduct(a, k)) out.add(t, c * c2);
    return out;
}

TensorComb reduced_coproduct_iter(const HopfAlgebra& alg, int r, const LinComb& x)
{
    TensorComb out(r);
    for (const auto& [k, c] : x)
        for (const auto& [t, c2] : alg.reduced_coproduct(r, k)) out.add(t, c * c2);
    return out;
}

LinComb hopf_power(const HopfAlgebra& alg, int a, const LinComb& x)
{
    LinComb out;
    for (const auto& [k, c] : x) out += c * alg.hopf_power(a, k);
    return out;
}

LinComb eulerian_idempotent(const HopfAlgebra& alg, const LinComb& x)
{
    LinComb out;
    for (const auto& [k, c] : x) out += c * alg.eulerian(k);
    return out;
}

LinComb higher_eulerian(const HopfAlgebra& alg, int i, const LinComb& x)
{
    if (i < 0) throw std::invalid_argument("higher_eulerian: negative index");
    LinComb out;
    if (i == 0) {
        for (const auto& [k, c] : x)
            if (k.degree == 0) out.add(k, c);
        return out;
    }
    const Rational scale = Rational(1) / Rational(factorial(i));
    for (const auto& [k, c] : x) {
        for (const auto& [t, c2] : alg.iterated_coproduct(i, k)) {
            std::vector<LinComb> parts;
            bool zero = false;
            for (const Key& f : t) {
                parts.push_back(alg.eulerian(f));
                if (parts.back().empty()) {
                    zero = true;
                    break;
                }
            }
            if (!zero) out += (scale * c * c2) * iterated_product(alg, parts);
        }
    }
    return out;
}

bool is_eigenvector(const HopfAlgebra& alg, const LinComb& v, int a, int exponent)
{
    return hopf_power(alg, a, v) == rational_pow(Rational(a), exponent) * v;
}

bool equal_up_to_scalar(const LinComb& x, const LinComb& y)
{
    if (x.empty() || y.empty()) return x.empty() && y.empty();
    if (x.size() != y.size()) return false;
    const auto& [k0, c0] = *x.begin();
    const Rational ratio = y.coeff(k0) / c0;
    if (ratio == 0) return false;
    return ratio * x == y;
}

namespace {

int degree_of(const LinComb& v)
{
    if (v.empty()) throw std::invalid_argument("zero vector has no degree");
    const int d = v.begin()->first.degree;
    for (const auto& [k, c] : v)
        if (k.degree != d) throw std::invalid_argument("inhomogeneous element");
    return d;
}

void check_spanning(const HopfAlgebra& alg, const std::vector<EigVector>& out, std::size_t dim, const char* what)
{
    std::vector<LinComb> vs;
    for (const auto& e : out) vs.push_back(e.vector);
    if (out.size() != dim || rank_of(vs) != dim)
        throw std::runtime_error(std::string(what) + ": eigenvectors do not span the degree (" + alg.name() + ")");
}

std::string multiset_label(const std::vector<std::string>& names, const std::vector<int>& idx)
{
    std::string out = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ",";
        out += names[static_cast<std::size_t>(idx[i])];
    }
    return out + "}";
}

}  // namespace

std::vector<EigVector> eigenbasis_commutative(const HopfAlgebra& alg, const std::vector<LinComb>& generators, int n)
{
    if (!alg.is_commutative()) throw std::invalid_argument("eigenbasis_commutative: " + alg.name() + " is not commutative");
    std::vector<int> degs;
    std::vector<LinComb> images;
    std::vector<std::string> names;
    for (const auto& g : generators) {
        degs.push_back(degree_of(g));
        images.push_back(eulerian_idempotent(alg, g));
        names.push_back(to_string(g));
    }
    std::vector<EigVector> out;
    for (const auto& ms : multisets_with_degree(degs, n)) {
        std::vector<LinComb> parts;
        for (int i : ms) parts.push_back(images[static_cast<std::size_t>(i)]);
        EigVector ev;
        ev.vector = iterated_product(alg, parts);
        ev.exponent = static_cast<int>(ms.size());
        ev.label = multiset_label(names, ms);
        std::vector<LinComb> raw;
        for (int i : ms) raw.push_back(generators[static_cast<std::size_t>(i)]);
        const LinComb mono = iterated_product(alg, raw);
        if (mono.size() == 1 && mono.begin()->second == 1) {
            ev.label_key = mono.begin()->first;
            ev.label = to_string(*ev.label_key);
        }
        out.push_back(std::move(ev));
    }
    check_spanning(alg, out, alg.basis(n).size(), "eigenbasis_commutative");
    return out;
}

std::vector<EigVector> eigenbasis_commutative(const HopfAlgebra& alg, int n)
{
    std::vector<LinComb> gens;
    for (int d = 1; d <= n; ++d)
        for (const Key& g : alg.generators(d)) gens.emplace_back(g);
    return eigenbasis_commutative(alg, gens, n);
}

std::vector<EigVector> eigenbasis_cocommutative(const HopfAlgebra& alg, const std::vector<LinComb>& primitives, int n)
{
    if (!alg.is_cocommutative())
        throw std::invalid_argument("eigenbasis_cocommutative: " + alg.name() + " is not cocommutative");
    std::vector<int> degs;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < primitives.size(); ++i) {
        const LinComb& p = primitives[i];
        degs.push_back(degree_of(p));
        if (!reduced_coproduct_iter(alg, 2, p).empty())
            throw std::invalid_argument("eigenbasis_cocommutative: element is not primitive: " + to_string(p));
        names.push_back("p" + std::to_string(i));
    }
    std::vector<EigVector> out;
    for (auto ms : multisets_with_degree(degs, n)) {
        const int k = static_cast<int>(ms.size());
        LinComb sum;
        std::vector<int> arr = ms;
        do {
            std::vector<LinComb> parts;
            for (int i : arr) parts.push_back(primitives[static_cast<std::size_t>(i)]);
            sum += iterated_product(alg, parts);
        } while (std::next_permutation(arr.begin(), arr.end()));
        EigVector ev;
        ev.vector = Rational(stabilizer_size(ms), factorial(k)) * sum;
        ev.exponent = k;
        ev.label = multiset_label(names, ms);
        out.push_back(std::move(ev));
    }
    check_spanning(alg, out, alg.basis(n).size(), "eigenbasis_cocommutative");
    return out;
}

namespace {

std::string word_label(const Word& w)
{
    return to_string(word_key(w));
}

}  // namespace

std::vector<EigVector> eigenbasis_shuffle_basis(const HopfAlgebra& alg, const std::vector<Word>& words, const ShuffleImage& P)
{
    std::set<std::pair<Word, Word>> pairs;
    for (const auto& w : words) {
        const auto f = lyndon_factorization(w);
        for (std::size_t i = 0; i + 1 < f.size() && pairs.size() < 24; ++i) pairs.emplace(f[i], f[i + 1]);
    }
    if (auto bad = shuffle_law_violation(alg, P, {pairs.begin(), pairs.end()}))
        throw std::invalid_argument("eigenbasis_shuffle_basis: shuffle law fails for " + word_label(bad->first) + " and " +
                                    word_label(bad->second));

    std::map<Word, LinComb> lyndon_image;
    std::vector<EigVector> out;
    for (const auto& w : words) {
        const auto factors = lyndon_factorization(w);
        std::vector<LinComb> parts;
        for (const auto& u : factors) {
            auto it = lyndon_image.find(u);
            if (it == lyndon_image.end()) it = lyndon_image.emplace(u, eulerian_idempotent(alg, P(u))).first;
            parts.push_back(it->second);
        }
        EigVector ev;
        ev.vector = iterated_product(alg, parts);
        ev.exponent = static_cast<int>(factors.size());
        ev.label = word_label(w);
        out.push_back(std::move(ev));
    }
    std::vector<LinComb> vs;
    for (const auto& e : out) vs.push_back(e.vector);
    if (rank_of(vs) != out.size()) throw std::runtime_error("eigenbasis_shuffle_basis: eigenvectors are dependent");
    return out;
}

std::optional<std::pair<Word, Word>> shuffle_law_violation(const HopfAlgebra& alg, const ShuffleImage& P,
                                                           const std::vector<std::pair<Word, Word>>& pairs)
{
    for (const auto& [u, v] : pairs) {
        LinComb rhs;
        for (const auto& [w, mult] : shuffles(u, v)) rhs += Rational(mult) * P(w);
        if (multiply(alg, P(u), P(v)) != rhs) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::vector<EigVector> eigenbasis_free_basis(const HopfAlgebra& alg, const std::vector<Word>& words, const LetterImage& letter)
{
    if (!alg.is_cocommutative()) throw std::invalid_argument("eigenbasis_free_basis: " + alg.name() + " is not cocommutative");
    std::vector<EigVector> out;
    for (const auto& w : words) {
        LinComb v;
        for (const auto& wp : rearrangements(w)) {
            const Rational f = shuffle_right_eigenfunction(w, wp);
            if (f == 0) continue;
            std::vector<LinComb> parts;
            for (int x : wp) parts.push_back(alg.eulerian(letter(x)));
            v += f * iterated_product(alg, parts);
        }
        EigVector ev;
        ev.vector = std::move(v);
        ev.exponent = lyndon_factor_count(w);
        ev.label = word_label(w);
        out.push_back(std::move(ev));
    }
    std::vector<LinComb> vs;
    for (const auto& e : out) vs.push_back(e.vector);
    if (rank_of(vs) != out.size()) throw std::runtime_error("eigenbasis_free_basis: eigenvectors are dependent");
    return out;
}

Integer eigenvalue_multiplicity(const HopfAlgebra& alg, const std::vector<int>& degree, int k)
{
    const int total = std::accumulate(degree.begin(), degree.end(), 0);
    if (k < 0 || k > total) throw std::invalid_argument("eigenvalue_multiplicity: k out of range");
    using Deg = std::vector<int>;

    // all nonzero sub-degrees, by total then lexicographically
    std::vector<Deg> subs;
    Deg cur(degree.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == degree.size()) {
            if (std::accumulate(cur.begin(), cur.end(), 0) > 0) subs.push_back(cur);
            return;
        }
        for (int v = 0; v <= degree[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(subs.begin(), subs.end(), [](const Deg& a, const Deg& b) {
        const int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
        return sa != sb ? sa < sb : a < b;
    });

    auto fits = [&](const Deg& d) {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] > degree[i]) return false;
        return true;
    };
    auto add_scaled = [](Deg a, const Deg& b, int j) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += j * b[i];
        return a;
    };

    // poly(x) truncated at degree, then b_mu by peeling factors
    std::map<Deg, Integer> poly{{Deg(degree.size(), 0), 1}};
    std::vector<std::pair<Deg, Integer>> b;
    for (const Deg& mu : subs) {
        const Integer dim = static_cast<long>(basis_of(alg, mu).size());
        const Integer bm = dim - (poly.count(mu) ? poly[mu] : Integer(0));
        if (bm < 0) throw std::runtime_error("eigenvalue_multiplicity: dimensions are not a free-algebra series");
        if (bm == 0) continue;
        b.emplace_back(mu, bm);
        std::map<Deg, Integer> next;
        for (const auto& [d, c] : poly)
            for (int j = 0;; ++j) {
                const Deg e = add_scaled(d, mu, j);
                if (!fits(e)) break;
                const Integer coeff = binomial(static_cast<int>(bm) + j - 1, j);
                next[e] += c * (j == 0 ? Integer(1) : coeff);
            }
        poly = std::move(next);
    }

    std::map<std::pair<Deg, int>, Integer> q{{{Deg(degree.size(), 0), 0}, 1}};
    for (const auto& [mu, bm] : b) {
        std::map<std::pair<Deg, int>, Integer> next;
        for (const auto& [dk, c] : q)
            for (int j = 0;; ++j) {
                const Deg e = add_scaled(dk.first, mu, j);
                if (!fits(e)) break;
                const Integer coeff = j == 0 ? Integer(1) : binomial(static_cast<int>(bm) + j - 1, j);
                next[{e, dk.second + j}] += c * coeff;
            }
        q = std::move(next);
    }
    const auto it = q.find({degree, k});
    return it == q.end() ? Integer(0) : it->second;
}

std::vector<EigVector> top_eigenspace(const HopfAlgebra& alg, const std::vector<int>& degree)
{
    std::vector<std::vector<Key>> multisets;
    if (alg.has_multidegree()) {
        std::vector<Key> ms;
        for (std::size_t i = 0; i < degree.size(); ++i) {
            if (degree[i] == 0) continue;
            std::vector<int> unit_deg(degree.size(), 0);
            unit_deg[i] = 1;
            const auto b1 = alg.basis_multi(unit_deg);
            if (b1.size() != 1) throw std::logic_error("top_eigenspace: expected one letter per unit multidegree");
            for (int r = 0; r < degree[i]; ++r) ms.push_back(b1.front());
        }
        multisets.push_back(ms);
    } else {
        const int n = degree.at(0);
        const auto b1 = alg.basis(1);
        if (b1.empty()) throw std::invalid_argument("top_eigenspace: no basis elements of degree 1");
        for (const auto& idx : multisets_with_degree(std::vector<int>(b1.size(), 1), n)) {
            std::vector<Key> ms;
            for (int i : idx) ms.push_back(b1[static_cast<std::size_t>(i)]);
            multisets.push_back(ms);
        }
    }
    std::vector<EigVector> out;
    for (auto ms : multisets) {
        std::sort(ms.begin(), ms.end());
        const Integer z = stabilizer_size(ms);
        LinComb sum;
        std::string label = "{";
        for (std::size_t i = 0; i < ms.size(); ++i) label += (i ? "," : "") + to_string(ms[i]);
        do {
            sum += iterated_product(alg, ms);
        } while (std::next_permutation(ms.begin(), ms.end()));
        EigVector ev;
        ev.vector = Rational(z) * sum;
        ev.exponent = static_cast<int>(ms.size());
        ev.label = label + "}";
        out.push_back(std::move(ev));
    }
    return out;
}

}  // namespace hopfchain
