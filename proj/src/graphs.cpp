#include "instances_internal.hpp"

#include "hopfchain/instances.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace hopfchain {

namespace {

constexpr int max_graph_order = 9;

using Adjacency = std::vector<std::vector<bool>>;

Key key_from_bits(int n, const std::vector<int>& bits)
{
    std::vector<int> data{n};
    data.insert(data.end(), bits.begin(), bits.end());
    return Key{KeyKind::graph, n, std::move(data)};
}

// minimal row-major upper-triangle bit string over all relabellings
Key canonical_from_adjacency(const Adjacency& adj)
{
    const int n = static_cast<int>(adj.size());
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<int>>, Key> memo;

    std::vector<int> raw;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) raw.push_back(adj[i][j] ? 1 : 0);
    const auto memo_key = std::make_pair(n, raw);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(memo_key); it != memo.end()) return it->second;
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = raw, cur(raw.size());
    do {
        int cmp = 0;
        std::size_t k = 0;
        for (int i = 0; i < n && cmp <= 0; ++i)
            for (int j = i + 1; j < n; ++j, ++k) {
                const int b = adj[perm[i]][perm[j]] ? 1 : 0;
                if (cmp == 0) {
                    if (b < best[k]) cmp = -1;
                    else if (b > best[k]) {
                        cmp = 1;
                        break;
                    }
                }
                cur[k] = b;
            }
        if (cmp < 0) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Key out = key_from_bits(n, best);
    std::lock_guard lock(mutex);
    return memo.try_emplace(memo_key, std::move(out)).first->second;
}

class Graphs final : public HopfAlgebra {
public:
    std::string name() const override { return "graphs"; }
    bool is_commutative() const override { return true; }
    bool is_cocommutative() const override { return true; }
    Key unit() const override { return key_from_bits(0, {}); }

    std::vector<Key> basis(int n) const override
    {
        if (n < 0 || n > max_graph_order) throw std::invalid_argument("graphs: supported orders are 0..9");
        std::lock_guard lock(basis_mutex_);
        if (basis_memo_.empty()) basis_memo_.push_back({unit()});
        while (static_cast<int>(basis_memo_.size()) <= n) {
            const int m = static_cast<int>(basis_memo_.size());
            std::set<Key> next;
            for (const Key& g : basis_memo_.back()) {
                Adjacency adj = graph_adjacency(g);
                for (auto& row : adj) row.push_back(false);
                adj.emplace_back(m, false);
                for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
                    for (int v = 0; v < m - 1; ++v) adj[v][m - 1] = adj[m - 1][v] = (mask >> v & 1u) != 0;
                    next.insert(canonical_from_adjacency(adj));
                }
            }
            basis_memo_.emplace_back(next.begin(), next.end());
        }
        return basis_memo_[n];
    }

    bool free_commutative_basis() const override { return true; }
    std::vector<Key> factorize(const Key& g) const override
    {
        const auto adj = graph_adjacency(g);
        const int n = graph_order(g);
        std::vector<int> comp(n, -1);
        std::vector<Key> out;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> members{s}, stack{s};
            comp[s] = s;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int w = 0; w < n; ++w)
                    if (adj[v][w] && comp[w] < 0) {
                        comp[w] = s;
                        members.push_back(w);
                        stack.push_back(w);
                    }
            }
            std::sort(members.begin(), members.end());
            out.push_back(induced_subgraph(g, members));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<Key> generators(int d) const override
    {
        std::vector<Key> out;
        for (const Key& g : basis(d))
            if (graph_connected(g)) out.push_back(g);
        return out;
    }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override { return LinComb(disjoint_union(a, b)); }
    TensorComb compute_coproduct(const Key& x) const override
    {
        const int n = graph_order(x);
        TensorComb out(2);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> in, rest;
            for (int v = 0; v < n; ++v) (mask >> v & 1u ? in : rest).push_back(v);
            out.add({induced_subgraph(x, in), induced_subgraph(x, rest)}, 1);
        }
        return out;
    }

private:
    mutable std::mutex basis_mutex_;
    mutable std::vector<std::vector<Key>> basis_memo_;
};

}  // namespace

Key graph_canonicalize(int n, const std::vector<Edge>& edges)
{
    if (n < 0 || n > max_graph_order) throw std::invalid_argument("graph: supported orders are 0..9");
    Adjacency adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("graph: vertex out of range");
        if (u == v) throw std::invalid_argument("graph: loops are not allowed");
        if (adj[u][v]) throw std::invalid_argument("graph: repeated edge");
        adj[u][v] = adj[v][u] = true;
    }
    return canonical_from_adjacency(adj);
}

Key parse_graph(const std::string& text)
{
    static const std::regex whole(R"(\s*n\s*=\s*(\d+)\s*;?\s*(.*?)\s*)");
    static const std::regex edge(R"(\s*(\d+)\s*-\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, whole)) throw std::invalid_argument("graph: expected \"n=<k>; u-v,...\"");
    const int n = std::stoi(m[1]);
    std::vector<Edge> edges;
    const std::string body = m[2];
    std::size_t start = 0;
    while (start < body.size()) {
        auto comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        const std::string item = body.substr(start, comma - start);
        std::smatch em;
        if (!std::regex_match(item, em, edge))
            throw std::invalid_argument("graph: bad edge \"" + item + "\"");
        edges.emplace_back(std::stoi(em[1]) - 1, std::stoi(em[2]) - 1);
        start = comma + 1;
    }
    return graph_canonicalize(n, edges);
}

int graph_order(const Key& g)
{
    if (g.kind != KeyKind::graph) throw std::invalid_argument("not a graph key");
    return g.data.at(0);
}

Adjacency graph_adjacency(const Key& g)
{
    const int n = graph_order(g);
    Adjacency adj(n, std::vector<bool>(n, false));
    std::size_t bit = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit) adj[i][j] = adj[j][i] = g.data.at(bit) != 0;
    return adj;
}

std::vector<Edge> graph_edges(const Key& g)
{
    const auto adj = graph_adjacency(g);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = i + 1; j < adj.size(); ++j)
            if (adj[i][j]) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Key induced_subgraph(const Key& g, const std::vector<int>& vertices)
{
    const auto adj = graph_adjacency(g);
    const std::size_t k = vertices.size();
    Adjacency sub(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = adj.at(vertices[i]).at(vertices[j]);
    return canonical_from_adjacency(sub);
}

bool graph_connected(const Key& g)
{
    const int n = graph_order(g);
    if (n == 0) return false;
    const auto adj = graph_adjacency(g);
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (adj[v][w] && !seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

Key disjoint_union(const Key& a, const Key& b)
{
    const int na = graph_order(a), nb = graph_order(b);
    if (na + nb > max_graph_order) throw std::invalid_argument("graph: union exceeds supported order");
    const auto aa = graph_adjacency(a), ab = graph_adjacency(b);
    Adjacency adj(na + nb, std::vector<bool>(na + nb, false));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) adj[i][j] = aa[i][j];
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) adj[na + i][na + j] = ab[i][j];
    return canonical_from_adjacency(adj);
}

namespace detail {

std::shared_ptr<const HopfAlgebra> make_graphs() { return std::make_shared<Graphs>(); }

}  // namespace detail

}  // namespace hopfchain
