#include "hopfchain/simulate.hpp"

#include "hopfchain/instances.hpp"
#include "hopfchain/named_chains.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hopfchain {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Engine trial_engine(std::uint64_t seed, std::uint64_t trial)
{
    return Engine(splitmix64(seed + (trial + 1) * 0x9E3779B97F4A7C15ULL));
}

int uniform_below(Engine& rng, int n)
{
    if (n <= 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return static_cast<int>(x % range);
}

ChainKind parse_chain_kind(const std::string& name)
{
    if (name == "riffle") return ChainKind::riffle;
    if (name == "rock") return ChainKind::rock;
    if (name == "tree") return ChainKind::tree;
    if (name == "graph") return ChainKind::graph;
    throw std::invalid_argument("unknown chain \"" + name + "\" (riffle, rock, tree, graph)");
}

std::string to_string(ChainKind kind)
{
    switch (kind) {
    case ChainKind::riffle: return "riffle";
    case ChainKind::rock: return "rock";
    case ChainKind::tree: return "tree";
    case ChainKind::graph: return "graph";
    }
    return "?";
}

std::string algebra_of(ChainKind kind)
{
    switch (kind) {
    case ChainKind::riffle: return "shuffle";
    case ChainKind::rock: return "sym_h";
    case ChainKind::tree: return "ck_forests";
    case ChainKind::graph: return "graphs";
    }
    return "?";
}

namespace {

void require_a(int a)
{
    if (a < 2) throw std::invalid_argument("a must be at least 2");
}

}  // namespace

Word riffle_step(const Word& deck, int a, Engine& rng)
{
    require_a(a);
    const std::size_t n = deck.size();
    std::vector<int> label(n);
    std::vector<std::size_t> next(static_cast<std::size_t>(a) + 1, 0);
    for (auto& l : label) {
        l = uniform_below(rng, a);
        ++next[static_cast<std::size_t>(l) + 1];
    }
    for (int p = 0; p < a; ++p) next[static_cast<std::size_t>(p) + 1] += next[static_cast<std::size_t>(p)];
    Word out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = deck[next[static_cast<std::size_t>(label[j])]++];
    return out;
}

Word riffle_cut_interleave(const Word& deck, int a, Engine& rng)
{
    require_a(a);
    const std::size_t n = deck.size();
    std::vector<std::size_t> size(static_cast<std::size_t>(a), 0);
    for (std::size_t j = 0; j < n; ++j) ++size[static_cast<std::size_t>(uniform_below(rng, a))];
    std::vector<std::size_t> start(static_cast<std::size_t>(a), 0);
    for (int p = 1; p < a; ++p) start[static_cast<std::size_t>(p)] = start[static_cast<std::size_t>(p) - 1] + size[static_cast<std::size_t>(p) - 1];
    Word out;
    std::size_t left = n;
    while (left > 0) {
        int r = uniform_below(rng, static_cast<int>(left));
        std::size_t p = 0;
        while (r >= static_cast<int>(size[p])) r -= static_cast<int>(size[p++]);
        out.push_back(deck[start[p]++]);
        --size[p];
        --left;
    }
    return out;
}

Partition rock_step(const Partition& lambda, int a, Engine& rng)
{
    require_a(a);
    Partition out;
    std::vector<int> pile(static_cast<std::size_t>(a));
    for (int part : lambda) {
        std::fill(pile.begin(), pile.end(), 0);
        for (int u = 0; u < part; ++u) ++pile[static_cast<std::size_t>(uniform_below(rng, a))];
        for (int c : pile)
            if (c > 0) out.push_back(c);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

Key tree_prune_step(const Key& forest, int a, Engine& rng)
{
    require_a(a);
    const auto s = forest_shape(forest);
    const std::size_t n = static_cast<std::size_t>(s.size());
    std::vector<int> colour(n);
    for (auto& c : colour) c = uniform_below(rng, a) + 1;
    std::vector<bool> alive(n, true);
    std::vector<int> found;
    std::vector<int> stack;
    for (int c = a; c >= 2; --c) {
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v] || colour[v] == c) continue;
            // descendants of v inside the remaining forest with colour c
            found.clear();
            stack.assign(s.children[v].begin(), s.children[v].end());
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                if (!alive[static_cast<std::size_t>(u)]) continue;
                if (colour[static_cast<std::size_t>(u)] == c) found.push_back(u);
                for (int w : s.children[static_cast<std::size_t>(u)]) stack.push_back(w);
            }
            if (found.empty()) continue;
            std::sort(found.begin(), found.end());
            const int u = found[static_cast<std::size_t>(uniform_below(rng, static_cast<int>(found.size())))];
            std::swap(colour[v], colour[static_cast<std::size_t>(u)]);
        }
        for (std::size_t v = 0; v < n; ++v)
            if (colour[v] == c) alive[v] = false;
    }
    std::vector<int> parent = s.parent;
    for (std::size_t v = 0; v < n; ++v)
        if (parent[v] >= 0 && colour[static_cast<std::size_t>(parent[v])] != colour[v]) parent[v] = -1;
    return forest_from_parents(parent, std::vector<bool>(n, true));
}

Key graph_step(const Key& graph, int a, Engine& rng)
{
    require_a(a);
    const int n = graph_order(graph);
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (auto& c : colour) c = uniform_below(rng, a);
    std::vector<Edge> kept;
    for (const auto& [u, v] : graph_edges(graph))
        if (colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)]) kept.emplace_back(u, v);
    return graph_canonicalize(n, kept);
}

Key chain_step(ChainKind kind, const Key& x, int a, Engine& rng)
{
    switch (kind) {
    case ChainKind::riffle: return word_key(riffle_step(x.data, a, rng));
    case ChainKind::rock: return partition_key(rock_step(x.data, a, rng));
    case ChainKind::tree: return tree_prune_step(x, a, rng);
    case ChainKind::graph: return graph_step(x, a, rng);
    }
    throw std::invalid_argument("unknown chain kind");
}

namespace {

bool distinct_letters(const Word& w)
{
    Word s = w;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

void require_distinct(const Key& x, const std::string& stat)
{
    if (!distinct_letters(x.data)) throw std::invalid_argument(stat + " needs a deck of distinct cards");
    if (x.data.size() < 2) throw std::invalid_argument(stat + " needs at least two cards");
}

int triangles(const Key& g)
{
    const auto adj = graph_adjacency(g);
    const std::size_t n = adj.size();
    int t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adj[i][j])
                for (std::size_t k = j + 1; k < n; ++k)
                    if (adj[i][k] && adj[j][k]) ++t;
    return t;
}

Statistic decaying(std::string name, std::function<Rational(const Key&)> value, int a, int decay)
{
    Statistic s;
    s.name = std::move(name);
    s.value = value;
    s.expectation = [value, a, decay](const Key& x0, int m) {
        return rational_pow(Rational(a), -decay * m) * value(x0);
    };
    return s;
}

// statistic = c + f with f an eigenfunction of eigenvalue a^-decay and c constant
Statistic shifted(std::string name, std::function<Rational(const Key&)> value,
                  std::function<Rational(const Key&)> constant, int a, int decay)
{
    Statistic s;
    s.name = name;
    s.value = value;
    s.expectation = [=](const Key& x0, int m) {
        require_distinct(x0, name);
        const Rational c = constant(x0);
        return c + rational_pow(Rational(a), -decay * m) * (value(x0) - c);
    };
    return s;
}

}  // namespace

Statistic named_statistic(ChainKind kind, const std::string& name, int a)
{
    require_a(a);
    const auto third = [](const Key& x) { return Rational(static_cast<int>(x.data.size()) - 2) / 3; };
    switch (kind) {
    case ChainKind::riffle:
        if (name == "descents")
            return shifted(name, [](const Key& x) { return Rational(descents(x.data)); },
                           [](const Key& x) { return Rational(static_cast<int>(x.data.size()) - 1) / 2; }, a, 1);
        if (name == "peaks") return shifted(name, [](const Key& x) { return Rational(peaks(x.data)); }, third, a, 2);
        if (name == "valleys") return shifted(name, [](const Key& x) { return Rational(valleys(x.data)); }, third, a, 2);
        if (name == "double_runs")
            return shifted(name, [](const Key& x) { return Rational(double_ascents(x.data) + double_descents(x.data)); },
                           third, a, 2);
        if (name == "asc_minus_des")
            return decaying(name, [](const Key& x) { return shuffle_statistic_eigenfunction(ShuffleStatistic::descents, x.data); }, a, 1);
        if (name == "peaks_minus_valleys")
            return decaying(name, [](const Key& x) { return shuffle_statistic_eigenfunction(ShuffleStatistic::peaks_minus_valleys, x.data); },
                            a, 2);
        break;
    case ChainKind::rock:
        if (name == "pairs" || name == "triples") {
            const int j = name == "pairs" ? 2 : 3;
            return decaying(name, [j](const Key& x) {
                Rational s = 0;
                for (int p : x.data) s += Rational(binomial(p, j));
                return s;
            }, a, j - 1);
        }
        break;
    case ChainKind::tree:
        if (name.rfind("fC:", 0) == 0) {
            const Key C = forest_canonicalize(name.substr(3));
            if (forest_trees(C).size() != 1 || C.degree < 2) throw std::invalid_argument("fC needs a tree with at least two vertices");
            return decaying(name, [C](const Key& x) { return tree_fC(C, x); }, a, C.degree - 1);
        }
        break;
    case ChainKind::graph:
        if (name == "edges") return decaying(name, [](const Key& x) { return Rational(static_cast<int>(graph_edges(x).size())); }, a, 1);
        if (name == "triangles") return decaying(name, [](const Key& x) { return Rational(triangles(x)); }, a, 2);
        break;
    }
    throw std::invalid_argument("unknown statistic \"" + name + "\" for the " + to_string(kind) + " chain");
}

Statistic eigenfunction_statistic(const Chain& chain, const EigFunction& f)
{
    if (f.side != EigFunction::Side::right || !satisfies_eigen_equation(chain, f))
        throw std::invalid_argument("statistic " + f.label + " is not a right eigenfunction of the chain");
    const Rational beta = eigenvalue(chain, f);
    Statistic s;
    s.name = "f_" + f.label;
    const auto values = f.values;
    const auto K = chain.K;
    s.value = [values, K](const Key& x) { return values[K.row_index(x)]; };
    s.expectation = [values, K, beta](const Key& x0, int m) { return rational_pow(beta, m) * values[K.row_index(x0)]; };
    return s;
}

namespace {

int worker_count(int threads, long trials)
{
    long w = threads > 0 ? threads : static_cast<long>(std::max(1u, std::thread::hardware_concurrency()));
    return static_cast<int>(std::max(1L, std::min(w, trials)));
}

// Runs body(trial, rng) for every trial, spreading trials over workers.
template <class Body>
void run_trials(long trials, std::uint64_t seed, int threads, Body&& body)
{
    const int workers = worker_count(threads, trials);
    auto work = [&](int w) {
        for (long t = w; t < trials; t += workers) {
            Engine rng = trial_engine(seed, static_cast<std::uint64_t>(t));
            body(t, rng);
        }
    };
    if (workers == 1) {
        work(0);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
}

}  // namespace

TrialReport expectation_test(ChainKind kind, const Key& x0, const Statistic& stat, int a, int m, long trials,
                             std::uint64_t seed, int threads)
{
    require_a(a);
    if (m < 0 || trials < 1) throw std::invalid_argument("expectation_test: need m >= 0 and trials >= 1");
    TrialReport r;
    r.statistic = stat.name;
    r.m = m;
    r.trials = trials;
    r.exact = stat.expectation(x0, m);

    std::vector<Key> finals(static_cast<std::size_t>(trials));
    run_trials(trials, seed, threads, [&](long t, Engine& rng) {
        Key x = x0;
        for (int step = 0; step < m; ++step) x = chain_step(kind, x, a, rng);
        finals[static_cast<std::size_t>(t)] = std::move(x);
    });

    std::map<Key, double> cache;
    std::vector<double> values;
    values.reserve(finals.size());
    for (const Key& x : finals) {
        auto it = cache.find(x);
        if (it == cache.end()) it = cache.emplace(x, to_double(stat.value(x))).first;
        values.push_back(it->second);
    }
    double sum = 0;
    for (double v : values) sum += v;
    r.mean = sum / static_cast<double>(trials);
    double ss = 0;
    for (double v : values) ss += (v - r.mean) * (v - r.mean);
    const double var = trials > 1 ? ss / static_cast<double>(trials - 1) : 0.0;
    r.stderr_ = std::sqrt(var / static_cast<double>(trials));
    const double diff = r.mean - to_double(r.exact);
    if (r.stderr_ > 0) r.z = diff / r.stderr_;
    else r.z = std::abs(diff) < 1e-12 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    return r;
}

ChiSquareReport one_step_chi_square(ChainKind kind, const Chain& chain, const Key& x0, long trials,
                                    std::uint64_t seed, int threads)
{
    if (trials < 1) throw std::invalid_argument("one_step_chi_square: trials must be positive");
    const std::size_t row = chain.index(x0);
    std::vector<Key> samples(static_cast<std::size_t>(trials));
    run_trials(trials, seed, threads, [&](long t, Engine& rng) {
        samples[static_cast<std::size_t>(t)] = chain_step(kind, x0, chain.a, rng);
    });
    std::map<Key, long> observed;
    for (const Key& y : samples) ++observed[y];

    ChiSquareReport r;
    std::ostringstream detail;
    struct Cell {
        double expected;
        long observed;
    };
    std::vector<Cell> cells;
    for (std::size_t j = 0; j < chain.states.size(); ++j) {
        const Rational& p = chain.K(row, j);
        const auto it = observed.find(chain.states[j]);
        const long o = it == observed.end() ? 0 : it->second;
        if (p == 0) {
            if (o > 0) detail << "impossible state " << to_string(chain.states[j]) << " observed " << o << " times; ";
            continue;
        }
        cells.push_back({to_double(p) * static_cast<double>(trials), o});
    }
    long accounted = 0;
    for (const auto& c : cells) accounted += c.observed;
    if (accounted != trials) {
        r.statistic = std::numeric_limits<double>::infinity();
        r.p_value = 0;
        detail << (trials - accounted) << " samples outside the support of the exact row";
        r.detail = detail.str();
        return r;
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.expected < y.expected; });
    std::vector<Cell> pooled;
    Cell small{0, 0};
    for (const auto& c : cells) {
        if (c.expected < 5) {
            small.expected += c.expected;
            small.observed += c.observed;
        } else {
            pooled.push_back(c);
        }
    }
    if (small.expected > 0) {
        if (small.expected < 5 && !pooled.empty()) {
            pooled.front().expected += small.expected;
            pooled.front().observed += small.observed;
        } else {
            pooled.push_back(small);
        }
    }
    for (const auto& c : pooled) {
        const double d = static_cast<double>(c.observed) - c.expected;
        r.statistic += d * d / c.expected;
    }
    r.dof = static_cast<int>(pooled.size()) - 1;
    if (r.dof <= 0) {
        r.p_value = 1;
    } else {
        const boost::math::chi_squared dist(r.dof);
        r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    }
    detail << pooled.size() << " cells";
    r.detail = detail.str();
    return r;
}

Key bowtie_graph()
{
    return graph_canonicalize(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

std::vector<TrialReport> standard_suite(long trials, std::uint64_t seed, int threads)
{
    struct Case {
        ChainKind kind;
        Key x0;
        std::string stat;
        int m;
    };
    const Key deck = word_key({1, 2, 3, 4, 5, 6, 7, 8});
    const Key rock = partition_key({6});
    const Key tree = forest_canonicalize("[[*[**]]*]");
    const Key graph = bowtie_graph();
    std::vector<Case> cases;
    for (int m = 1; m <= 4; ++m) cases.push_back({ChainKind::riffle, deck, "descents", m});
    for (int m = 1; m <= 4; ++m) cases.push_back({ChainKind::riffle, deck, "peaks", m});
    cases.push_back({ChainKind::riffle, deck, "valleys", 2});
    cases.push_back({ChainKind::riffle, deck, "double_runs", 2});
    for (int m = 1; m <= 3; ++m) cases.push_back({ChainKind::rock, rock, "pairs", m});
    cases.push_back({ChainKind::rock, rock, "triples", 1});
    cases.push_back({ChainKind::tree, tree, "fC:[*]", 1});
    cases.push_back({ChainKind::tree, tree, "fC:[*]", 2});
    cases.push_back({ChainKind::tree, tree, "fC:[**]", 1});
    cases.push_back({ChainKind::graph, graph, "edges", 1});
    cases.push_back({ChainKind::graph, graph, "edges", 2});
    cases.push_back({ChainKind::graph, graph, "triangles", 1});

    std::vector<TrialReport> out;
    std::uint64_t offset = 0;
    for (const auto& c : cases) {
        auto report = expectation_test(c.kind, c.x0, named_statistic(c.kind, c.stat, 2), 2, c.m, trials, seed + offset, threads);
        report.statistic = to_string(c.kind) + ":" + report.statistic;
        out.push_back(std::move(report));
        ++offset;
    }
    return out;
}

}  // namespace hopfchain
