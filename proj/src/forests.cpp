#include "instances_internal.hpp"

#include "hopfchain/instances.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace hopfchain {

namespace {

using Code = std::vector<int>;  // one tree: 1 <children> 0

Key forest_from_codes(std::vector<Code> trees)
{
    std::sort(trees.begin(), trees.end());
    Key k{KeyKind::forest, 0, {}};
    for (const auto& t : trees) {
        k.data.insert(k.data.end(), t.begin(), t.end());
        k.degree += static_cast<int>(t.size() / 2);
    }
    return k;
}

// splits a concatenation of trees
std::vector<Code> split_codes(const std::vector<int>& data, std::size_t begin, std::size_t end)
{
    std::vector<Code> out;
    std::size_t start = begin;
    int depth = 0;
    for (std::size_t i = begin; i < end; ++i) {
        depth += data[i] ? 1 : -1;
        if (depth < 0) throw std::invalid_argument("forest: malformed code");
        if (depth == 0) {
            out.emplace_back(data.begin() + static_cast<long>(start), data.begin() + static_cast<long>(i + 1));
            start = i + 1;
        }
    }
    if (depth != 0) throw std::invalid_argument("forest: malformed code");
    return out;
}

Code tree_code(std::vector<Code> children)
{
    std::sort(children.begin(), children.end());
    Code c{1};
    for (const auto& ch : children) c.insert(c.end(), ch.begin(), ch.end());
    c.push_back(0);
    return c;
}

std::vector<Code> children_of(const Code& t)
{
    return split_codes(t, 1, t.size() - 1);
}

struct Cut {
    std::vector<Code> removed;
    std::optional<Code> trunk;
};

std::vector<Cut> trunks(const Code& t)
{
    std::vector<Cut> out;
    out.push_back({{t}, std::nullopt});
    // trunk containing the root: an independent choice in each child
    std::vector<std::pair<std::vector<Code>, std::vector<Code>>> acc{{{}, {}}};
    for (const auto& child : children_of(t)) {
        std::vector<std::pair<std::vector<Code>, std::vector<Code>>> next;
        for (const auto& cut : trunks(child))
            for (const auto& [removed, kept] : acc) {
                auto r = removed;
                r.insert(r.end(), cut.removed.begin(), cut.removed.end());
                auto k = kept;
                if (cut.trunk) k.push_back(*cut.trunk);
                next.emplace_back(std::move(r), std::move(k));
            }
        acc = std::move(next);
    }
    for (auto& [removed, kept] : acc) out.push_back({std::move(removed), tree_code(std::move(kept))});
    return out;
}

class CKForests final : public HopfAlgebra {
public:
    std::string name() const override { return "ck_forests"; }
    bool is_commutative() const override { return true; }
    bool is_cocommutative() const override { return false; }
    Key unit() const override { return Key{KeyKind::forest, 0, {}}; }

    std::vector<Key> basis(int n) const override
    {
        if (n < 0) throw std::invalid_argument("ck_forests: negative degree");
        std::lock_guard lock(mutex_);
        return basis_locked(n);
    }

    bool free_commutative_basis() const override { return true; }
    std::vector<Key> factorize(const Key& k) const override { return forest_trees(k); }
    std::vector<Key> generators(int d) const override
    {
        std::lock_guard lock(mutex_);
        return trees_locked(d);
    }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override
    {
        auto trees = split_codes(a.data, 0, a.data.size());
        auto more = split_codes(b.data, 0, b.data.size());
        trees.insert(trees.end(), more.begin(), more.end());
        return LinComb(forest_from_codes(std::move(trees)));
    }

    TensorComb compute_coproduct(const Key& x) const override
    {
        std::vector<std::pair<std::vector<Code>, std::vector<Code>>> acc{{{}, {}}};
        for (const auto& t : split_codes(x.data, 0, x.data.size())) {
            std::vector<std::pair<std::vector<Code>, std::vector<Code>>> next;
            for (const auto& cut : trunks(t))
                for (const auto& [left, right] : acc) {
                    auto l = left;
                    l.insert(l.end(), cut.removed.begin(), cut.removed.end());
                    auto r = right;
                    if (cut.trunk) r.push_back(*cut.trunk);
                    next.emplace_back(std::move(l), std::move(r));
                }
            acc = std::move(next);
        }
        TensorComb out(2);
        for (auto& [l, r] : acc) out.add({forest_from_codes(std::move(l)), forest_from_codes(std::move(r))}, 1);
        return out;
    }

private:
    std::vector<Key> trees_locked(int d) const
    {
        if (d < 1) return {};
        while (static_cast<int>(trees_.size()) < d) {
            const int m = static_cast<int>(trees_.size()) + 1;
            std::vector<Key> level;
            for (const Key& f : basis_locked(m - 1)) level.push_back(forest_from_codes({tree_code(split_codes(f.data, 0, f.data.size()))}));
            std::sort(level.begin(), level.end());
            trees_.push_back(std::move(level));
        }
        return trees_[static_cast<std::size_t>(d - 1)];
    }

    std::vector<Key> basis_locked(int n) const
    {
        if (n == 0) return {unit()};
        std::vector<Key> pool;
        std::vector<int> degs;
        for (int d = 1; d <= n; ++d)
            for (const Key& t : trees_locked(d)) {
                pool.push_back(t);
                degs.push_back(d);
            }
        std::vector<Key> out;
        for (const auto& ms : multisets_with_degree(degs, n)) {
            std::vector<Code> codes;
            for (int i : ms) codes.push_back(pool[static_cast<std::size_t>(i)].data);
            out.push_back(forest_from_codes(std::move(codes)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    mutable std::mutex mutex_;
    mutable std::vector<std::vector<Key>> trees_;
};

}  // namespace

Key forest_canonicalize(const std::string& expr)
{
    std::string s;
    for (std::size_t i = 0; i < expr.size(); ++i) {
        const char c = expr[i];
        if (c == ' ' || c == '\t') continue;
        // UTF-8 bullet
        if (expr.compare(i, 3, "\xE2\x80\xA2") == 0) {
            s += '*';
            i += 2;
            continue;
        }
        s += c;
    }
    if (s.empty() || s == "1") return Key{KeyKind::forest, 0, {}};
    std::size_t pos = 0;
    std::function<Code()> tree = [&]() -> Code {
        if (pos >= s.size()) throw std::invalid_argument("forest: unexpected end of \"" + expr + "\"");
        if (s[pos] == '*') {
            ++pos;
            return {1, 0};
        }
        if (s[pos] != '[') throw std::invalid_argument("forest: unexpected '" + std::string(1, s[pos]) + "' in \"" + expr + "\"");
        ++pos;
        std::vector<Code> children;
        while (pos < s.size() && s[pos] != ']') children.push_back(tree());
        if (pos >= s.size()) throw std::invalid_argument("forest: unbalanced brackets in \"" + expr + "\"");
        ++pos;
        if (children.empty()) throw std::invalid_argument("forest: empty brackets in \"" + expr + "\"");
        return tree_code(std::move(children));
    };
    std::vector<Code> trees;
    while (pos < s.size()) trees.push_back(tree());
    return forest_from_codes(std::move(trees));
}

Key make_forest(const std::vector<Key>& trees)
{
    std::vector<Code> codes;
    for (const Key& f : trees) {
        auto parts = split_codes(f.data, 0, f.data.size());
        codes.insert(codes.end(), parts.begin(), parts.end());
    }
    return forest_from_codes(std::move(codes));
}

Key make_tree(const std::vector<Key>& children)
{
    std::vector<Code> codes;
    for (const Key& f : children) {
        auto parts = split_codes(f.data, 0, f.data.size());
        codes.insert(codes.end(), parts.begin(), parts.end());
    }
    return forest_from_codes({tree_code(std::move(codes))});
}

std::vector<Key> forest_trees(const Key& forest)
{
    if (forest.kind != KeyKind::forest) throw std::invalid_argument("not a forest key");
    std::vector<Key> out;
    for (auto& c : split_codes(forest.data, 0, forest.data.size())) out.push_back(forest_from_codes({std::move(c)}));
    return out;
}

std::vector<Key> tree_children(const Key& tree)
{
    const auto trees = split_codes(tree.data, 0, tree.data.size());
    if (trees.size() != 1) throw std::invalid_argument("tree_children: expected a single tree");
    std::vector<Key> out;
    for (auto& c : children_of(trees.front())) out.push_back(forest_from_codes({std::move(c)}));
    return out;
}

Key path_tree(int n)
{
    if (n < 1) throw std::invalid_argument("path_tree: n must be positive");
    Code c(static_cast<std::size_t>(n), 1);
    c.insert(c.end(), static_cast<std::size_t>(n), 0);
    return forest_from_codes({std::move(c)});
}

ForestShape forest_shape(const Key& forest)
{
    if (forest.kind != KeyKind::forest) throw std::invalid_argument("not a forest key");
    ForestShape s;
    std::vector<int> stack;
    for (int bit : forest.data) {
        if (bit) {
            const int v = s.size();
            const int p = stack.empty() ? -1 : stack.back();
            s.parent.push_back(p);
            s.children.emplace_back();
            if (p >= 0) s.children[static_cast<std::size_t>(p)].push_back(v);
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    s.desc.assign(s.parent.size(), 1);
    for (int v = s.size() - 1; v >= 0; --v)
        if (s.parent[static_cast<std::size_t>(v)] >= 0) s.desc[static_cast<std::size_t>(s.parent[static_cast<std::size_t>(v)])] += s.desc[static_cast<std::size_t>(v)];
    return s;
}

Key forest_from_parents(const std::vector<int>& parent, const std::vector<bool>& keep)
{
    const std::size_t n = parent.size();
    std::vector<std::vector<int>> kids(n);
    std::vector<int> roots;
    for (std::size_t v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        const int p = parent[v];
        if (p >= 0 && keep[static_cast<std::size_t>(p)]) kids[static_cast<std::size_t>(p)].push_back(static_cast<int>(v));
        else roots.push_back(static_cast<int>(v));
    }
    std::function<Code(int)> build = [&](int v) {
        std::vector<Code> ch;
        for (int c : kids[static_cast<std::size_t>(v)]) ch.push_back(build(c));
        return tree_code(std::move(ch));
    };
    std::vector<Code> trees;
    for (int r : roots) trees.push_back(build(r));
    return forest_from_codes(std::move(trees));
}

namespace detail {

std::shared_ptr<const HopfAlgebra> make_ck_forests() { return std::make_shared<CKForests>(); }

}  // namespace detail

}  // namespace hopfchain
