#include "hopfchain/chain.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"
#include "hopfchain/named_chains.hpp"
#include "hopfchain/simulate.hpp"
#include "hopfchain/tables.hpp"
#include "hopfchain/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace hopfchain;

namespace {

// Usage and validation problems; exit status 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string algebra;
    int n = 0;
    std::string multidegree;
    int a = 2;
    int m = 1;
    std::string side = "right";
    bool dump = false;
    std::string format = "tsv";
    std::string out;
    std::string fn;
    std::string x, y;
    std::string chain = "riffle";
    std::string start;
    std::string stat = "descents";
    long trials = 100000;
    std::uint64_t seed = 42;
    int threads = 0;
    bool suite_run = false;
    bool chi2 = false;
    bool header = true;
    std::string suite = "all";
    int max_degree = 5;
};

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.out);
    file << text;
}

void emit_table(const Options& o, const Table& t)
{
    emit(o, o.format == "json" ? render_json(t) : render_tsv(t));
}

Chain chain_from(const Options& o, int a)
{
    if (o.algebra.empty()) throw UsageError("--algebra is required");
    const auto alg = get_instance(o.algebra);
    const bool has_n = o.n > 0, has_nu = !o.multidegree.empty();
    if (has_n == has_nu) throw UsageError("give exactly one of --n and --multidegree");
    if (has_nu) return build_chain_multi(alg, parse_int_list(o.multidegree), a);
    return build_chain(alg, o.n, a);
}

Chain chain_from(const Options& o) { return chain_from(o, o.a); }

int require_n(const Options& o)
{
    if (o.n <= 0) throw UsageError("--n must be positive");
    return o.n;
}

void run_matrix(const Options& o)
{
    const Chain chain = chain_from(o);
    if (o.m < 0) throw UsageError("--m must be nonnegative");
    emit_table(o, matrix_table(chain, o.m == 1 ? chain.K : matrix_power(chain.K, o.m)));
}

EigFunction::Side side_of(const Options& o)
{
    if (o.side == "left") return EigFunction::Side::left;
    if (o.side == "right") return EigFunction::Side::right;
    throw UsageError("--side must be left or right");
}

void run_eigenbasis(const Options& o)
{
    const auto side = side_of(o);
    const Chain chain = chain_from(o);
    emit_table(o, o.dump ? eigenvalue_table(chain, side) : eigen_table(chain, side));
}

void run_lump_check(const Options& o, int& status)
{
    const int n = require_n(o);
    const Chain source = build_chain_multi(get_instance("shuffle"), std::vector<int>(static_cast<std::size_t>(n), 1), o.a);
    const Chain target = build_chain(get_instance("qsym_F"), n, o.a);
    const auto r = check_lumping([](const Key& w) { return theta_descent(w.data); }, source, target);
    Table t;
    t.corner = "map";
    t.columns = {"lumpable", "max_violation", "detail"};
    t.rows = {"Des: shuffle(1^" + std::to_string(n) + ") -> qsym_F"};
    t.cells = {{r.ok ? "yes" : "no", to_string(r.max_violation), r.detail}};
    emit_table(o, t);
    if (!r.ok) status = 2;
}

std::vector<Key> keys_from(const std::vector<std::vector<int>>& lists, Key (*make)(std::vector<int>))
{
    std::vector<Key> out;
    for (const auto& l : lists) out.push_back(make(l));
    return out;
}

void emit_value(const Options& o, const std::string& name, const std::string& value)
{
    Table t;
    t.corner = "function";
    t.columns = {"value"};
    t.rows = {name};
    t.cells = {{value}};
    emit_table(o, t);
}

void run_named(const Options& o)
{
    const bool point = !o.x.empty();
    const auto args = [&]() -> std::pair<std::vector<int>, std::vector<int>> {
        if (o.y.empty()) throw UsageError("--fn " + o.fn + " needs --x and --y");
        return {parse_int_list(o.x), parse_int_list(o.y)};
    };
    using Side = EigFunction::Side;
    const auto pair_fn = [&](const std::string& prefix, Rational (*fn)(const std::vector<int>&, const std::vector<int>&),
                             std::vector<Key> order, Side side) {
        if (point) {
            const auto [x, y] = args();
            emit_value(o, prefix + "(" + o.x + ")(" + o.y + ")", to_string(fn(x, y)));
            return;
        }
        emit_table(o, function_table(prefix, order, order, [fn](const Key& f, const Key& x) { return fn(f.data, x.data); }, side));
    };
    if (o.fn == "rock_f") return pair_fn("f_", rock_f, point ? std::vector<Key>{} : rock_table_order(require_n(o)), Side::right);
    if (o.fn == "rock_g") return pair_fn("g_", rock_g, point ? std::vector<Key>{} : rock_table_order(require_n(o)), Side::left);
    if (o.fn == "qsym_f") return pair_fn("f_", qsym_right_f, point ? std::vector<Key>{} : qsym_table_order(require_n(o)), Side::right);
    if (o.fn == "qsym_g") return pair_fn("g_", qsym_left_g, point ? std::vector<Key>{} : qsym_table_order(require_n(o)), Side::left);
    if (o.fn == "fsh") {
        if (point) {
            const auto [x, y] = args();
            return emit_value(o, "fSh_" + to_string(word_key(x)) + to_string(word_key(y)), to_string(shuffle_right_eigenfunction(x, y)));
        }
        if (o.multidegree.empty()) throw UsageError("--fn fsh needs --x/--y or --multidegree");
        const auto words = keys_from(words_of_multidegree(parse_int_list(o.multidegree)), word_key);
        return emit_table(o, function_table("fSh_", words, words,
                                            [](const Key& f, const Key& x) { return shuffle_right_eigenfunction(f.data, x.data); },
                                            Side::right));
    }
    if (o.fn == "tree_factorial") {
        if (!point) throw UsageError("--fn tree_factorial needs --x");
        const Key t = forest_canonicalize(o.x);
        return emit_value(o, to_string(t) + "!", tree_factorial(t).str());
    }
    if (o.fn == "tree_fC") {
        if (!point || o.y.empty()) throw UsageError("--fn tree_fC needs --x (the tree C) and --y (the forest T)");
        const Key C = forest_canonicalize(o.x), T = forest_canonicalize(o.y);
        return emit_value(o, "f_" + to_string(C) + "(" + to_string(T) + ")", to_string(tree_fC(C, T)));
    }
    if (o.fn == "descent_prob") {
        const int n = require_n(o);
        if (!o.y.empty())
            return emit_value(o, "P(Des=" + o.y + ")", to_string(descent_probability_from_identity(n, o.a, o.m, parse_int_list(o.y))));
        Table t;
        t.corner = "J";
        t.columns = {"probability"};
        for (const Key& J : qsym_table_order(n)) {
            t.rows.push_back(to_string(J));
            t.cells.push_back({to_string(descent_probability_from_identity(n, o.a, o.m, J.data))});
        }
        return emit_table(o, t);
    }
    throw UsageError("unknown --fn \"" + o.fn +
                     "\" (rock_f, rock_g, qsym_f, qsym_g, fsh, tree_factorial, tree_fC, descent_prob)");
}

Key default_start(ChainKind kind, int n)
{
    switch (kind) {
    case ChainKind::riffle: {
        Word w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
        return word_key(w);
    }
    case ChainKind::rock: return partition_key({n});
    case ChainKind::tree: return path_tree(n);
    case ChainKind::graph: {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return graph_canonicalize(n, edges);
    }
    }
    throw std::logic_error("unknown chain kind");
}

std::string report_row(const TrialReport& r)
{
    std::ostringstream s;
    s.precision(8);
    s << r.statistic << '\t' << r.m << '\t' << r.trials << '\t' << r.mean << '\t' << to_string(r.exact) << '\t' << r.stderr_
      << '\t' << r.z << '\n';
    return s.str();
}

void run_simulate(const Options& o, int& status)
{
    const std::string header = "stat\tm\ttrials\tmean\texact\tstderr\tz\n";
    if (o.suite_run) {
        std::string text = o.header ? header : "";
        int outside = 0;
        for (const auto& r : standard_suite(o.trials, o.seed, o.threads)) {
            text += report_row(r);
            if (std::abs(r.z) > 3) ++outside;
        }
        emit(o, text);
        if (outside > 0) status = 2;
        return;
    }
    const ChainKind kind = parse_chain_kind(o.chain);
    const auto alg = get_instance(algebra_of(kind));
    const Key x0 = o.start.empty() ? default_start(kind, require_n(o)) : parse_basis_key(*alg, o.start);
    if (o.chi2) {
        const Chain chain = kind == ChainKind::riffle ? build_chain_multi(alg, multidegree_of(x0.data), o.a) : build_chain(alg, x0.degree, o.a);
        const auto r = one_step_chi_square(kind, chain, x0, o.trials, o.seed, o.threads);
        std::ostringstream s;
        if (o.header) s << "start\ttrials\tchi2\tdof\tp\tdetail\n";
        s << to_string(x0) << '\t' << o.trials << '\t' << r.statistic << '\t' << r.dof << '\t' << r.p_value << '\t' << r.detail << '\n';
        emit(o, s.str());
        if (r.p_value <= 0.001) status = 2;
        return;
    }
    const auto r = expectation_test(kind, x0, named_statistic(kind, o.stat, o.a), o.a, o.m, o.trials, o.seed, o.threads);
    emit(o, (o.header ? header : "") + report_row(r));
}

void run_verify(const Options& o, int& status)
{
    int failed = 0, total = 0;
    std::ostream* sink = &std::cout;
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + o.out);
        sink = &file;
    }
    run_verification(o.suite, o.max_degree, [&](const CheckResult& r) {
        ++total;
        if (!r.ok) ++failed;
        *sink << (r.ok ? "ok" : "FAIL") << '\t' << r.name << '\t' << r.seconds << "s";
        if (!r.ok) *sink << '\t' << r.detail;
        *sink << std::endl;
    });
    *sink << "passed " << (total - failed) << " of " << total << " checks\n";
    if (failed > 0) status = 2;
}

void run_absorption(const Options& o)
{
    if (o.x.empty()) throw UsageError("absorption needs --x (the starting state)");
    if (o.m < 1) throw UsageError("--m must be positive");
    const Chain base = chain_from(o);
    const Key x0 = parse_basis_key(*base.algebra, o.x);
    int am = 1;
    for (int i = 0; i < o.m; ++i) am *= o.a;
    // m steps of the a-chain are one step of the a^m-chain
    const Chain chain = chain_from(o, am);
    Table t;
    t.corner = "quantity";
    t.columns = {"value"};
    const auto add = [&](std::string name, const Rational& v) {
        t.rows.push_back(std::move(name));
        t.cells.push_back({to_string(v)});
    };
    add("absorbed_after_m", absorption_probability(chain, x0));
    add("absorbed_after_m_characters", absorption_probability_characters(chain, x0));
    if (!o.y.empty()) {
        const Key y = parse_basis_key(*base.algebra, o.y);
        add("reach_bound_from_x", reachability_bound(base, y, x0, o.m));
        add("reach_bound_any_start", reachability_bound_any_start(base, y, o.m));
        add("reach_bound_loose", reachability_bound_loose(base, y, x0, o.m));
    }
    emit_table(o, t);
}

void add_output(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    cmd->add_option("--out", o.out, "write to this file instead of stdout");
}

void add_chain(CLI::App* cmd, Options& o)
{
    cmd->add_option("--algebra", o.algebra, "shuffle, free_assoc, sym_h, sym_schur, graphs, ck_forests, qsym_F, sym_p")->required();
    cmd->add_option("--n", o.n, "degree");
    cmd->add_option("--multidegree", o.multidegree, "multidegree such as 1,1,2 (word algebras)");
    cmd->add_option("--a", o.a, "number of piles")->capture_default_str();
    add_output(cmd, o);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Markov chains from Hopf-power maps: matrices, eigenfunctions, simulation"};
    app.require_subcommand(1);
    Options o;

    auto* matrix = app.add_subcommand("matrix", "transition matrix");
    add_chain(matrix, o);
    matrix->add_option("--m", o.m, "power of the matrix")->capture_default_str();

    auto* eigen = app.add_subcommand("eigenbasis", "left or right eigenfunctions");
    add_chain(eigen, o);
    eigen->add_option("--side", o.side, "left or right")->capture_default_str();
    eigen->add_flag("--dump", o.dump, "list exponents and eigenvalues instead of values");

    auto* stationary = app.add_subcommand("stationary", "stationary distributions");
    add_chain(stationary, o);

    auto* lump = app.add_subcommand("lump-check", "Dynkin criterion for descent sets of shuffled decks");
    lump->add_option("--n", o.n, "number of distinct cards")->required();
    lump->add_option("--a", o.a, "number of piles")->capture_default_str();
    add_output(lump, o);

    auto* reverse = app.add_subcommand("reverse", "time reversal");
    add_chain(reverse, o);

    auto* named = app.add_subcommand("named", "closed-form eigenfunctions and probabilities");
    named->add_option("--fn", o.fn, "rock_f, rock_g, qsym_f, qsym_g, fsh, tree_factorial, tree_fC, descent_prob")->required();
    named->add_option("--n", o.n, "degree for tables");
    named->add_option("--multidegree", o.multidegree, "multidegree for fsh tables");
    named->add_option("--x", o.x, "index of the function (or the tree)");
    named->add_option("--y", o.y, "argument");
    named->add_option("--a", o.a, "number of piles")->capture_default_str();
    named->add_option("--m", o.m, "steps")->capture_default_str();
    add_output(named, o);

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo runs of the named chains");
    simulate->add_option("--chain", o.chain, "riffle, rock, tree, graph")->capture_default_str();
    simulate->add_option("--n", o.n, "size of the default start");
    simulate->add_option("--start", o.start, "starting state in the algebra's text form");
    simulate->add_option("--a", o.a, "number of piles")->capture_default_str();
    simulate->add_option("--m", o.m, "steps")->capture_default_str();
    simulate->add_option("--trials", o.trials, "trials")->capture_default_str();
    simulate->add_option("--seed", o.seed, "seed")->capture_default_str();
    simulate->add_option("--stat", o.stat, "statistic")->capture_default_str();
    simulate->add_option("--threads", o.threads, "worker threads, 0 for all cores")->capture_default_str();
    simulate->add_flag("--suite", o.suite_run, "run the standard calibration suite");
    simulate->add_flag("--chi2", o.chi2, "chi-square test of one step against the exact row");
    simulate->add_flag("!--no-header", o.header, "omit the header line");
    simulate->add_option("--out", o.out, "write to this file instead of stdout");

    auto* verify = app.add_subcommand("verify", "invariant battery");
    verify->add_option("--suite", o.suite, "all, hopf, power, chains, eigen, stationary, lumping, named")->capture_default_str();
    verify->add_option("--max-degree", o.max_degree, "largest degree")->capture_default_str();
    verify->add_option("--out", o.out, "write to this file instead of stdout");

    auto* absorption = app.add_subcommand("absorption", "absorption probability and reachability bounds");
    add_chain(absorption, o);
    absorption->add_option("--x", o.x, "starting state")->required();
    absorption->add_option("--y", o.y, "target state for reachability bounds");
    absorption->add_option("--m", o.m, "steps")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    int status = 0;
    try {
        if (*matrix) run_matrix(o);
        else if (*eigen) run_eigenbasis(o);
        else if (*stationary) emit_table(o, stationary_table(chain_from(o)));
        else if (*lump) run_lump_check(o, status);
        else if (*reverse) {
            const Chain chain = chain_from(o);
            emit_table(o, matrix_table(chain, time_reversal(chain)));
        }
        else if (*named) run_named(o);
        else if (*simulate) run_simulate(o, status);
        else if (*verify) run_verify(o, status);
        else if (*absorption) run_absorption(o);
    } catch (const InvalidStateSpace& e) {
        std::cerr << "error: not a state space basis: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return status;
}
