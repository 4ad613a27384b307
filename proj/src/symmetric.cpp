#include "instances_internal.hpp"

#include "hopfchain/instances.hpp"
#include "hopfchain/matrix.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hopfchain {

namespace {

using KeyFactory = Key (*)(std::vector<int>);

std::vector<Key> partition_basis(int n, KeyFactory make)
{
    std::vector<Key> out;
    for (auto& p : partitions_of(n)) out.push_back(make(std::move(p)));
    return out;
}

LinComb union_product(const Key& a, const Key& b, KeyFactory make)
{
    std::vector<int> parts = a.data;
    parts.insert(parts.end(), b.data.begin(), b.data.end());
    return LinComb(make(std::move(parts)));
}

// multiplicative coproduct on monomials in single-part generators
TensorComb monomial_coproduct(const Key& x, KeyFactory make, bool primitive)
{
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> acc{{{}, 1}};
    for (int part : x.data) {
        std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> next;
        for (const auto& [lr, c] : acc)
            for (int i = 0; i <= part; ++i) {
                if (primitive && i != 0 && i != part) continue;
                auto [l, r] = lr;
                if (i > 0) l.push_back(i);
                if (part - i > 0) r.push_back(part - i);
                next[{l, r}] += c;
            }
        acc = std::move(next);
    }
    TensorComb out(2);
    for (const auto& [lr, c] : acc) out.add({make(lr.first), make(lr.second)}, c);
    return out;
}

class SymH final : public HopfAlgebra {
public:
    std::string name() const override { return "sym_h"; }
    bool is_commutative() const override { return true; }
    bool is_cocommutative() const override { return true; }
    Key unit() const override { return partition_key({}); }
    std::vector<Key> basis(int n) const override { return partition_basis(n, partition_key); }
    bool free_commutative_basis() const override { return true; }
    std::vector<Key> factorize(const Key& k) const override
    {
        std::vector<Key> out;
        for (int p : k.data) out.push_back(partition_key({p}));
        return out;
    }
    std::vector<Key> generators(int d) const override { return {partition_key({d})}; }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override { return union_product(a, b, partition_key); }
    TensorComb compute_coproduct(const Key& x) const override { return monomial_coproduct(x, partition_key, false); }
};

class SymP final : public HopfAlgebra {
public:
    std::string name() const override { return "sym_p"; }
    bool is_commutative() const override { return true; }
    bool is_cocommutative() const override { return true; }
    Key unit() const override { return power_sum_key({}); }
    std::vector<Key> basis(int n) const override { return partition_basis(n, power_sum_key); }
    bool free_commutative_basis() const override { return true; }
    std::vector<Key> factorize(const Key& k) const override
    {
        std::vector<Key> out;
        for (int p : k.data) out.push_back(power_sum_key({p}));
        return out;
    }
    std::vector<Key> generators(int d) const override { return {power_sum_key({d})}; }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override { return union_product(a, b, power_sum_key); }
    TensorComb compute_coproduct(const Key& x) const override { return monomial_coproduct(x, power_sum_key, true); }
};

// schur_to_h tables per degree
struct SchurTables {
    std::mutex mutex;
    std::map<int, std::map<Key, LinComb>> s_in_h;
};

SchurTables& schur_tables()
{
    static SchurTables t;
    return t;
}

LinComb to_schur(const LinComb& h)
{
    LinComb out;
    for (const auto& [k, c] : h) out += c * h_to_schur(k.data);
    return out;
}

class SymSchur final : public HopfAlgebra {
public:
    explicit SymSchur(std::shared_ptr<const HopfAlgebra> h) : h_(std::move(h)) {}
    std::string name() const override { return "sym_schur"; }
    bool is_commutative() const override { return true; }
    bool is_cocommutative() const override { return true; }
    Key unit() const override { return schur_key({}); }
    std::vector<Key> basis(int n) const override { return partition_basis(n, schur_key); }
    std::vector<Key> generators(int d) const override { return {schur_key({d})}; }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override
    {
        return to_schur(multiply(*h_, schur_to_h(a.data), schur_to_h(b.data)));
    }
    TensorComb compute_coproduct(const Key& x) const override
    {
        TensorComb out(2);
        for (const auto& [hk, c] : schur_to_h(x.data))
            for (const auto& [t, c2] : h_->coproduct(hk))
                for (const auto& [l, cl] : h_to_schur(t[0].data))
                    for (const auto& [r, cr] : h_to_schur(t[1].data)) out.add({l, r}, c * c2 * cl * cr);
        return out;
    }

private:
    std::shared_ptr<const HopfAlgebra> h_;
};

}  // namespace

Integer kostka_number(const Partition& lambda, const Composition& mu)
{
    thread_local std::map<std::pair<Partition, Composition>, Integer> memo;
    int size = 0, content = 0;
    for (int x : lambda) size += x;
    for (int x : mu) content += x;
    if (size != content) return 0;
    if (mu.empty()) return 1;
    const auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // remove a horizontal strip of size mu.back() holding the largest entry
    const int strip = mu.back();
    const Composition rest(mu.begin(), mu.end() - 1);
    Integer total = 0;
    Partition nu(lambda.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int removed) {
        if (i == lambda.size()) {
            if (removed != strip) return;
            Partition trimmed;
            for (int x : nu)
                if (x > 0) trimmed.push_back(x);
            total += kostka_number(trimmed, rest);
            return;
        }
        const int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
        for (int v = lambda[i]; v >= lo; --v) {
            const int r = removed + lambda[i] - v;
            if (r > strip) break;
            nu[i] = v;
            rec(i + 1, r);
        }
    };
    rec(0, 0);
    memo.emplace(key, total);
    return total;
}

LinComb h_to_schur(const Partition& mu)
{
    int n = 0;
    for (int x : mu) n += x;
    LinComb out;
    for (const auto& lambda : partitions_of(n)) {
        const Integer k = kostka_number(lambda, mu);
        if (k != 0) out.add(schur_key(lambda), Rational(k));
    }
    return out;
}

LinComb schur_to_h(const Partition& lambda)
{
    int n = 0;
    for (int x : lambda) n += x;
    auto& tables = schur_tables();
    {
        std::lock_guard lock(tables.mutex);
        if (auto it = tables.s_in_h.find(n); it != tables.s_in_h.end()) return it->second.at(schur_key(lambda));
    }
    const auto parts = partitions_of(n);
    std::vector<Key> rows, cols;
    for (const auto& p : parts) {
        rows.push_back(schur_key(p));
        cols.push_back(partition_key(p));
    }
    // K(lambda, mu): h_mu = sum_lambda K s_lambda
    ExactMatrix K(rows, cols);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) K(i, j) = Rational(kostka_number(parts[i], parts[j]));
    const ExactMatrix Kinv = inverse(K);  // rows indexed by h, columns by s
    std::map<Key, LinComb> table;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        LinComb v;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (Kinv(i, j) != 0) v.add(cols[i], Kinv(i, j));
        table.emplace(rows[j], std::move(v));
    }
    std::lock_guard lock(tables.mutex);
    auto& stored = tables.s_in_h.try_emplace(n, std::move(table)).first->second;
    return stored.at(schur_key(lambda));
}

namespace detail {

std::shared_ptr<const HopfAlgebra> make_sym_h() { return std::make_shared<SymH>(); }
std::shared_ptr<const HopfAlgebra> make_sym_p() { return std::make_shared<SymP>(); }
std::shared_ptr<const HopfAlgebra> make_sym_schur() { return std::make_shared<SymSchur>(make_sym_h()); }

}  // namespace detail

}  // namespace hopfchain
