#include "hopfchain/verify.hpp"

#include "hopfchain/chain.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"
#include "hopfchain/named_chains.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfchain {

CheckResult run_check(std::string name, const std::function<std::string()>& body)
{
    CheckResult r;
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        r.detail = body();
        r.ok = r.detail.empty();
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<std::vector<int>> degrees_of(const HopfAlgebra& alg, int n)
{
    if (!alg.has_multidegree() || n == 0) return {{n}};
    return compositions_of(n);
}

std::vector<Key> basis_up_to_relabelling(const HopfAlgebra& alg, int n)
{
    if (!alg.has_multidegree()) return alg.basis(n);
    if (n == 0) return {alg.unit()};
    std::vector<Key> out;
    for (const auto& nu : compositions_of(n))
        for (Key& k : alg.basis_multi(nu)) out.push_back(std::move(k));
    return out;
}

namespace {

Chain chain_of(const HopfAlgebra& alg, const std::vector<int>& degree, int a)
{
    const auto shared = get_instance(alg.name());
    if (alg.has_multidegree()) return build_chain_multi(shared, degree, a);
    return build_chain(shared, degree.front(), a);
}

std::string degree_text(const std::vector<int>& degree)
{
    std::string s = "(";
    for (std::size_t i = 0; i < degree.size(); ++i) s += (i ? "," : "") + std::to_string(degree[i]);
    return s + ")";
}

TensorComb coproduct_of_product(const HopfAlgebra& alg, const Key& y, const Key& z)
{
    TensorComb out(2);
    for (const auto& [k, c] : alg.product(y, z))
        for (const auto& [t, d] : alg.coproduct(k)) out.add(t, c * d);
    return out;
}

TensorComb product_of_coproducts(const HopfAlgebra& alg, const Key& y, const Key& z)
{
    TensorComb out(2);
    for (const auto& [ty, cy] : alg.coproduct(y))
        for (const auto& [tz, cz] : alg.coproduct(z))
            for (const auto& [l, cl] : alg.product(ty[0], tz[0]))
                for (const auto& [r, cr] : alg.product(ty[1], tz[1])) out.add({l, r}, cy * cz * cl * cr);
    return out;
}

}  // namespace

std::string hopf_axiom_failure(const HopfAlgebra& alg, int n)
{
    const Key one = alg.unit();
    const auto basis = basis_up_to_relabelling(alg, n);
    for (const Key& x : basis) {
        const auto& delta = alg.coproduct(x);
        for (const auto& [t, c] : delta) {
            if (t[0].degree + t[1].degree != x.degree) return "coproduct of " + to_string(x) + " is not graded";
            const bool left_unit = is_unit(t[0]), right_unit = is_unit(t[1]);
            if ((left_unit && t[1] != x) || (right_unit && t[0] != x) || ((left_unit || right_unit) && c != 1))
                return "counit fails on " + to_string(x);
            if (alg.is_cocommutative() && delta.coeff({t[1], t[0]}) != c) return "coproduct of " + to_string(x) + " is not cocommutative";
        }
        if (delta.coeff({one, x}) != 1 || delta.coeff({x, one}) != 1) return "counit fails on " + to_string(x);

        TensorComb left(3), right(3);
        for (const auto& [t, c] : delta) {
            for (const auto& [u, d] : alg.coproduct(t[0])) left.add({u[0], u[1], t[1]}, c * d);
            for (const auto& [u, d] : alg.coproduct(t[1])) right.add({t[0], u[0], u[1]}, c * d);
        }
        if (!(left == right)) return "coassociativity fails on " + to_string(x);
        if (!(alg.iterated_coproduct(3, x) == left)) return "iterated coproduct disagrees on " + to_string(x);
    }
    for (int d = 1; d < n; ++d) {
        const auto lower = basis_up_to_relabelling(alg, d);
        const auto upper = basis_up_to_relabelling(alg, n - d);
        for (const Key& y : lower)
            for (const Key& z : upper) {
                const auto& yz = alg.product(y, z);
                for (const auto& [k, c] : yz)
                    if (k.degree != n) return "product of " + to_string(y) + " and " + to_string(z) + " is not graded";
                if (alg.is_commutative() && !(yz == alg.product(z, y)))
                    return "product of " + to_string(y) + " and " + to_string(z) + " is not commutative";
                if (!(coproduct_of_product(alg, y, z) == product_of_coproducts(alg, y, z)))
                    return "compatibility fails on " + to_string(y) + " * " + to_string(z);
            }
    }
    for (int d1 = 1; d1 < n; ++d1)
        for (int d2 = 1; d1 + d2 < n; ++d2)
            for (const Key& x : basis_up_to_relabelling(alg, d1))
                for (const Key& y : basis_up_to_relabelling(alg, d2))
                    for (const Key& z : basis_up_to_relabelling(alg, n - d1 - d2)) {
                        const LinComb lhs = multiply(alg, alg.product(x, y), LinComb(z));
                        const LinComb rhs = multiply(alg, LinComb(x), alg.product(y, z));
                        if (!(lhs == rhs)) return "associativity fails on " + to_string(x) + ", " + to_string(y) + ", " + to_string(z);
                    }
    return {};
}

std::string power_rule_failure(const HopfAlgebra& alg, int n)
{
    if (!alg.is_commutative() && !alg.is_cocommutative()) return {};
    for (const Key& x : basis_up_to_relabelling(alg, n))
        if (!(hopf_power(alg, 2, alg.hopf_power(3, x)) == alg.hopf_power(6, x))) return "Psi^2 Psi^3 != Psi^6 on " + to_string(x);
    return {};
}

std::string chain_rows_failure(const HopfAlgebra& alg, const std::vector<int>& degree, int a)
{
    const Chain chain = chain_of(alg, degree, a);
    const std::size_t N = chain.states.size();
    for (std::size_t i = 0; i < N; ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < N; ++j) {
            const Rational& k = chain.K(i, j);
            if (k < 0) return "negative entry in row " + to_string(chain.states[i]);
            sum += k;
            if (k != 0 && i != j && alg.free_commutative_basis() &&
                factor_count(alg, chain.states[j]) <= factor_count(alg, chain.states[i]))
                return "move from " + to_string(chain.states[i]) + " to " + to_string(chain.states[j]) + " does not increase the factor count";
        }
        if (sum != 1) return "row " + to_string(chain.states[i]) + " sums to " + to_string(sum);
    }
    return {};
}

std::string eigen_failure(const HopfAlgebra& alg, const std::vector<int>& degree)
{
    const int n = std::accumulate(degree.begin(), degree.end(), 0);
    for (const auto& v : default_eigenvectors(alg, degree))
        if (!is_eigenvector(alg, v.vector, 2, v.exponent)) return "Psi^2 eigenvector fails for " + v.label;
    if (alg.is_commutative() && alg.is_cocommutative() && alg.free_commutative_basis()) {
        std::vector<LinComb> primitives;
        for (int d = 1; d <= n; ++d)
            for (const Key& c : alg.generators(d)) primitives.push_back(alg.eulerian(c));
        for (const auto& v : eigenbasis_cocommutative(alg, primitives, n))
            if (!is_eigenvector(alg, v.vector, 2, v.exponent)) return "symmetrised primitive product fails for " + v.label;
    }
    const Chain chain = chain_of(alg, degree, 2);
    const auto lefts = left_eigenbasis(chain);
    const auto rights = right_eigenbasis(chain);
    for (const auto& g : lefts)
        if (!satisfies_eigen_equation(chain, g)) return "left eigenfunction " + g.label + " fails";
    for (const auto& f : rights)
        if (!satisfies_eigen_equation(chain, f)) return "right eigenfunction " + f.label + " fails";
    if (!(matrix_power_via_spectrum(chain, 2, lefts, rights) == chain.K * chain.K)) return "spectral K^2 differs from K^2";
    return {};
}

std::string stationary_failure(const HopfAlgebra& alg, const std::vector<int>& degree)
{
    const Chain chain = chain_of(alg, degree, 2);
    const auto st = stationary_distributions(chain);
    if (st.distributions.empty()) return "no stationary distribution";
    for (const auto& pi : st.distributions) {
        if (std::accumulate(pi.begin(), pi.end(), Rational(0)) != 1) return "stationary vector does not sum to one";
        if (vector_times(pi, chain.K) != pi) return "pi K != pi";
    }
    return {};
}

std::string descent_lumping_failure(int n, int a)
{
    const Chain source = build_chain_multi(get_instance("shuffle"), std::vector<int>(static_cast<std::size_t>(n), 1), a);
    const Chain target = build_chain(get_instance("qsym_F"), n, a);
    const auto report = check_lumping([](const Key& w) { return theta_descent(w.data); }, source, target);
    if (!report.ok) return "Dynkin criterion fails by " + to_string(report.max_violation) + " " + report.detail;
    return {};
}

namespace {

std::string rock_failure(int n)
{
    const Chain chain = build_chain(get_instance("sym_h"), n, 2);
    const auto lefts = left_eigenbasis(chain);
    const auto rights = right_eigenbasis(chain);
    const std::size_t N = chain.states.size();
    for (std::size_t i = 0; i < N; ++i) {
        const auto& mu = chain.states[i].data;
        for (std::size_t j = 0; j < N; ++j) {
            const auto& lambda = chain.states[j].data;
            if (rock_f(mu, lambda) != rights[i].values[j]) return "rock_f" + to_string(chain.states[i]) + to_string(chain.states[j]);
            if (rock_g(mu, lambda) != lefts[i].values[j]) return "rock_g" + to_string(chain.states[i]) + to_string(chain.states[j]);
        }
        for (std::size_t k = 0; k < N; ++k) {
            Rational pairing = 0;
            for (std::size_t j = 0; j < N; ++j) pairing += rock_f(mu, chain.states[j].data) * rock_g(chain.states[k].data, chain.states[j].data);
            if (pairing != (i == k ? 1 : 0)) return "rock duality fails at " + to_string(chain.states[i]) + ", " + to_string(chain.states[k]);
        }
        // coefficient of m_lambda in p_mu: maps from parts of mu onto parts of lambda with matching sums
        for (std::size_t j = 0; j < N; ++j) {
            const auto& lambda = chain.states[j].data;
            long count = 0;
            std::vector<int> fill(lambda.size(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t p) {
                if (p == mu.size()) {
                    if (fill == lambda) ++count;
                    return;
                }
                for (std::size_t b = 0; b < lambda.size(); ++b)
                    if (fill[b] + mu[p] <= lambda[b]) {
                        fill[b] += mu[p];
                        rec(p + 1);
                        fill[b] -= mu[p];
                    }
            };
            rec(0);
            const Rational via_f = Rational(multinomial(lambda)) * rock_f(mu, lambda) * Rational(stabilizer_size(mu));
            if (via_f != count) return "power-sum expansion fails at " + to_string(chain.states[i]) + ", " + to_string(chain.states[j]);
        }
    }
    return {};
}

std::string tree_failure(int n)
{
    const auto alg = get_instance("ck_forests");
    const Chain chain = build_chain(alg, n, 2);
    for (int k = 2; k <= n; ++k)
        for (const Key& C : alg->generators(k)) {
            EigFunction f;
            f.side = EigFunction::Side::right;
            f.exponent = n + 1 - k;
            f.label = "f_" + to_string(C);
            for (const Key& T : chain.states) {
                const Rational v = tree_fC(C, T);
                if (v != generator_right_value(*alg, C, T)) return "tree_fC disagrees with f_c at " + to_string(C) + ", " + to_string(T);
                const auto b = tree_fC_bounds(C, T);
                if (v < b.lower || v > b.upper) return "tree_fC outside its bounds at " + to_string(C) + ", " + to_string(T);
                f.values.push_back(v);
            }
            if (!satisfies_eigen_equation(chain, f)) return f.label + " is not an eigenfunction";
        }
    for (const Key& T : chain.states)
        if (forest_trees(T).size() == 1) {
            const Integer fact = tree_factorial(T);
            if (Rational(factorial(n)) / Rational(fact) != eta(*alg, T)) return "eta != n!/T! at " + to_string(T);
        }
    return {};
}

std::string qsym_failure(int n)
{
    const Chain chain = build_chain(get_instance("qsym_F"), n, 2);
    const auto lefts = left_eigenbasis(chain);
    const auto rights = right_eigenbasis(chain);
    for (std::size_t i = 0; i < lefts.size(); ++i) {
        const auto I = parse_int_list(lefts[i].label);
        for (std::size_t j = 0; j < chain.states.size(); ++j) {
            const auto& J = chain.states[j].data;
            if (qsym_left_g(I, J) != lefts[i].values[j]) return "qsym_left_g" + lefts[i].label + to_string(chain.states[j]);
            if (qsym_right_f(I, J) != rights[i].values[j]) return "qsym_right_f" + rights[i].label + to_string(chain.states[j]);
        }
    }
    const std::size_t top = chain.index(composition_key({n}));
    ExactMatrix power = identity_matrix(chain.states);
    for (int m = 0; m <= 3; ++m) {
        for (std::size_t j = 0; j < chain.states.size(); ++j)
            if (descent_probability_from_identity(n, 2, m, chain.states[j].data) != power(top, j))
                return "descent probability differs at m=" + std::to_string(m) + ", J=" + to_string(chain.states[j]);
        power = power * chain.K;
    }
    return {};
}

std::string shuffle_statistics_failure(int n)
{
    const Chain chain = build_chain_multi(get_instance("shuffle"), std::vector<int>(static_cast<std::size_t>(n), 1), 2);
    const auto make = [&](EigFunction::Side side, int decay, const std::function<Rational(const Word&)>& value, std::string label) {
        EigFunction f;
        f.side = side;
        f.exponent = n - decay;
        f.label = std::move(label);
        for (const Key& w : chain.states) f.values.push_back(value(w.data));
        return f;
    };
    std::vector<EigFunction> fs;
    const auto add_stat = [&](ShuffleStatistic kind, EigFunction::Side side, Word pattern, std::string label) {
        fs.push_back(make(side, shuffle_statistic_decay(kind, pattern),
                          [kind, pattern](const Word& w) { return shuffle_statistic_eigenfunction(kind, w, pattern); }, std::move(label)));
    };
    add_stat(ShuffleStatistic::descents, EigFunction::Side::right, {}, "asc-des");
    add_stat(ShuffleStatistic::inversions_left, EigFunction::Side::left, {}, "inversions");
    if (n >= 2) add_stat(ShuffleStatistic::pattern, EigFunction::Side::right, {1, 2}, "pattern(12)");
    if (n >= 3) {
        add_stat(ShuffleStatistic::peaks_minus_valleys, EigFunction::Side::right, {}, "peak-vall");
        add_stat(ShuffleStatistic::pattern, EigFunction::Side::right, {1, 3, 2}, "pattern(132)");
        const Rational third = Rational(n - 2) / 3;
        fs.push_back(make(EigFunction::Side::right, 2, [third](const Word& w) { return peaks(w) - third; }, "peak"));
    }
    for (const auto& f : fs)
        if (!satisfies_eigen_equation(chain, f)) return f.label + " is not an eigenfunction";

    Word ascending(static_cast<std::size_t>(n));
    std::iota(ascending.begin(), ascending.end(), 1);
    const std::size_t start = chain.index(word_key(ascending));
    ExactMatrix power = identity_matrix(chain.states);
    for (int m = 0; m <= 3; ++m) {
        Rational des = 0, pk = 0;
        for (std::size_t j = 0; j < chain.states.size(); ++j) {
            des += power(start, j) * descents(chain.states[j].data);
            pk += power(start, j) * peaks(chain.states[j].data);
        }
        if (des != expected_descents(n, 2, m)) return "expected descents differ at m=" + std::to_string(m);
        if (n >= 2 && pk != expected_peaks(n, 2, m)) return "expected peaks differ at m=" + std::to_string(m);
        power = power * chain.K;
    }
    return {};
}

}  // namespace

std::string named_failure(int n)
{
    for (const auto& check : {rock_failure, tree_failure, qsym_failure, shuffle_statistics_failure}) {
        auto failure = check(n);
        if (!failure.empty()) return failure;
    }
    return {};
}

std::vector<std::string> verification_suites()
{
    return {"hopf", "power", "chains", "eigen", "stationary", "lumping", "named"};
}

std::vector<CheckResult> run_verification(const std::string& suite, int max_degree,
                                          const std::function<void(const CheckResult&)>& progress)
{
    const auto names = verification_suites();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite \"" + suite + "\"");
    if (max_degree < 1) throw std::invalid_argument("max degree must be positive");
    const auto wanted = [&](const std::string& s) { return suite == "all" || suite == s; };
    std::vector<CheckResult> out;
    const auto record = [&](std::string name, const std::function<std::string()>& body) {
        out.push_back(run_check(std::move(name), body));
        if (progress) progress(out.back());
    };
    for (const auto& name : instance_names()) {
        const auto alg = get_instance(name);
        for (int n = 1; n <= max_degree; ++n) {
            const std::string at = name + " n=" + std::to_string(n);
            if (wanted("hopf")) record("hopf axioms " + at, [&] { return hopf_axiom_failure(*alg, n); });
            if (wanted("power") && n <= 4) record("power rule " + at, [&] { return power_rule_failure(*alg, n); });
            for (const auto& degree : degrees_of(*alg, n)) {
                const std::string where = name + " " + degree_text(degree);
                if (wanted("chains"))
                    for (int a : {2, 3}) record("chain rows " + where + " a=" + std::to_string(a), [&] { return chain_rows_failure(*alg, degree, a); });
                if (wanted("eigen")) record("eigenfunctions " + where, [&] { return eigen_failure(*alg, degree); });
                if (wanted("stationary")) record("stationary " + where, [&] { return stationary_failure(*alg, degree); });
            }
        }
    }
    if (wanted("lumping"))
        for (int n = 2; n <= max_degree; ++n)
            for (int a : {2, 3}) record("descent lumping n=" + std::to_string(n) + " a=" + std::to_string(a), [&] { return descent_lumping_failure(n, a); });
    if (wanted("named"))
        for (int n = 2; n <= max_degree; ++n) record("named eigenfunctions n=" + std::to_string(n), [&] { return named_failure(n); });
    return out;
}

}  // namespace hopfchain
