#include "hopfchain/chain.hpp"

#include "hopfchain/instances.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>

namespace hopfchain {

namespace {

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
    return out;
}

std::vector<std::vector<int>> sub_degrees(const std::vector<int>& degree)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(degree.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == degree.size()) {
            if (std::accumulate(cur.begin(), cur.end(), 0) > 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= degree[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

bool fits_within(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& bound)
{
    for (std::size_t i = 0; i < bound.size(); ++i)
        if (a[i] + b[i] > bound[i]) return false;
    return true;
}

std::vector<Key> distinct_arrangement_sum_keys(std::vector<Key> factors, const std::function<void(const std::vector<Key>&)>& visit)
{
    std::sort(factors.begin(), factors.end());
    do {
        visit(factors);
    } while (std::next_permutation(factors.begin(), factors.end()));
    return factors;
}

Chain assemble(std::shared_ptr<const HopfAlgebra> alg, std::vector<int> degree, std::vector<Key> states, int a)
{
    if (a < 2) throw std::invalid_argument("a must be at least 2");
    if (states.size() > max_basis_size())
        throw std::length_error("basis of size " + std::to_string(states.size()) + " exceeds HOPFCHAIN_MAX_BASIS=" +
                                std::to_string(max_basis_size()));
    auto report = validate_state_space_basis(*alg, degree);
    if (!report.valid()) throw InvalidStateSpace(std::move(report));

    Chain c;
    c.algebra = alg;
    c.a = a;
    c.degree = std::move(degree);
    c.n = std::accumulate(c.degree.begin(), c.degree.end(), 0);
    c.states = std::move(states);
    for (const Key& x : c.states) {
        c.eta.push_back(eta(*alg, x));
        if (c.eta.back() <= 0) throw InvalidStateSpace(ValidationReport{{"eta(" + to_string(x) + ") is not positive"}});
    }
    c.K = ExactMatrix(c.states, c.states);
    const Rational scale = rational_pow(Rational(a), -c.n);
    for (std::size_t i = 0; i < c.states.size(); ++i) {
        Rational total = 0;
        for (const auto& [y, coeff] : alg->hopf_power(a, c.states[i])) {
            const std::size_t j = c.K.col_index(y);
            const Rational p = scale * coeff * c.eta[j] / c.eta[i];
            if (p < 0) throw std::logic_error("negative transition probability from " + to_string(c.states[i]));
            c.K(i, j) = p;
            total += p;
        }
        if (total != 1) throw std::logic_error("row " + to_string(c.states[i]) + " sums to " + to_string(total));
    }
    return c;
}

}  // namespace

InvalidStateSpace::InvalidStateSpace(ValidationReport r)
    : std::invalid_argument("invalid state space basis: " + join(r.violations)), report_(std::move(r))
{
}

ValidationReport validate_state_space_basis(const HopfAlgebra& alg, const std::vector<int>& degree)
{
    ValidationReport report;
    const auto subs = sub_degrees(degree);
    std::map<std::vector<int>, std::vector<Key>> bases;
    for (const auto& d : subs) bases[d] = basis_of(alg, d);

    for (const auto& [d, keys] : bases)
        for (const Key& x : keys) {
            for (const auto& [t, c] : alg.coproduct(x))
                if (c < 0) report.violations.push_back("negative coproduct coefficient in Delta(" + to_string(x) + ")");
            if (x.degree > 1 && alg.reduced_coproduct(2, x).empty())
                report.violations.push_back(to_string(x) + " is primitive");
        }
    for (const auto& [d1, k1] : bases)
        for (const auto& [d2, k2] : bases) {
            if (!fits_within(d1, d2, degree)) continue;
            for (const Key& x : k1)
                for (const Key& y : k2)
                    for (const auto& [z, c] : alg.product(x, y))
                        if (c < 0)
                            report.violations.push_back("negative product coefficient in " + to_string(x) + "*" + to_string(y));
        }
    return report;
}

Rational eta(const HopfAlgebra& alg, const Key& x)
{
    static std::mutex mutex;
    static std::map<std::pair<std::string, Key>, Rational> memo;
    if (x.degree <= 1) return 1;
    const auto key = std::make_pair(alg.name(), x);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    Rational total = 0;
    for (const auto& [t, c] : alg.coproduct(x))
        if (t[0].degree == 1) total += c * eta(alg, t[1]);
    std::lock_guard lock(mutex);
    return memo.try_emplace(key, total).first->second;
}

std::size_t max_basis_size()
{
    if (const char* env = std::getenv("HOPFCHAIN_MAX_BASIS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 5000;
}

Chain build_chain(std::shared_ptr<const HopfAlgebra> alg, int n, int a)
{
    if (n < 1) throw std::invalid_argument("degree must be positive");
    if (alg->has_multidegree())
        throw std::domain_error(alg->name() + ": degree " + std::to_string(n) +
                                " is a disconnected state space; give a multidegree");
    auto states = alg->basis(n);
    return assemble(std::move(alg), {n}, std::move(states), a);
}

Chain build_chain_multi(std::shared_ptr<const HopfAlgebra> alg, const std::vector<int>& nu, int a)
{
    if (std::accumulate(nu.begin(), nu.end(), 0) < 1) throw std::invalid_argument("multidegree must be nonzero");
    if (!alg->has_multidegree()) {
        if (nu.size() != 1) throw std::invalid_argument(alg->name() + " has no multidegree grading");
        return build_chain(std::move(alg), nu[0], a);
    }
    for (int v : nu)
        if (v < 0) throw std::invalid_argument("multidegree entries must be nonnegative");
    auto states = alg->basis_multi(nu);
    return assemble(std::move(alg), nu, std::move(states), a);
}

const ExactMatrix& transition_matrix(const Chain& chain)
{
    return chain.K;
}

StationaryResult stationary_distributions(const Chain& chain)
{
    StationaryResult out;
    const Rational norm = Rational(1) / Rational(factorial(chain.n) * factorial(chain.n));
    for (const auto& v : top_eigenspace(*chain.algebra, chain.degree)) {
        RationalVector pi(chain.states.size());
        for (const auto& [x, c] : v.vector) {
            const std::size_t i = chain.index(x);
            pi[i] = norm * chain.eta[i] * c;
        }
        if (std::accumulate(pi.begin(), pi.end(), Rational(0)) != 1)
            throw std::logic_error("stationary vector " + v.label + " does not sum to 1");
        if (vector_times(pi, chain.K) != pi) throw std::logic_error("stationary vector " + v.label + " is not invariant");
        out.labels.push_back(v.label);
        out.distributions.push_back(std::move(pi));
    }
    out.unique = out.distributions.size() == 1;
    return out;
}

Rational eigenvalue(const Chain& chain, const EigFunction& f)
{
    return rational_pow(Rational(chain.a), f.exponent - chain.n);
}

bool satisfies_eigen_equation(const Chain& chain, const EigFunction& f)
{
    const Rational beta = eigenvalue(chain, f);
    RationalVector scaled = f.values;
    for (auto& v : scaled) v *= beta;
    if (f.side == EigFunction::Side::left) return vector_times(f.values, chain.K) == scaled;
    return matrix_apply(chain.K, f.values) == scaled;
}

std::vector<EigFunction> left_eigenfunctions(const Chain& chain, const std::vector<EigVector>& vectors)
{
    std::vector<EigFunction> out;
    for (const auto& v : vectors) {
        EigFunction g;
        g.side = EigFunction::Side::left;
        g.values = coordinates(v.vector, chain.states);
        for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] *= chain.eta[i];
        g.exponent = v.exponent;
        g.label = v.label;
        out.push_back(std::move(g));
    }
    return out;
}

EigFunction right_eigenfunction_from_dual(const Chain& chain, const RationalVector& functional, int exponent, std::string label)
{
    if (functional.size() != chain.states.size()) throw std::invalid_argument("functional has the wrong length");
    EigFunction f;
    f.side = EigFunction::Side::right;
    f.values = functional;
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] /= chain.eta[i];
    f.exponent = exponent;
    f.label = std::move(label);
    return f;
}

std::vector<EigVector> default_eigenvectors(const HopfAlgebra& alg, const std::vector<int>& degree)
{
    const int n = std::accumulate(degree.begin(), degree.end(), 0);
    const std::string name = alg.name();
    // label each vector by the basis element indexing it
    const auto labelled = [](std::vector<EigVector> vs, Key (*make)(std::vector<int>)) {
        for (auto& v : vs) {
            v.label_key = make(parse_int_list(v.label));
            v.label = to_string(*v.label_key);
        }
        return vs;
    };
    if (name == "shuffle")
        return labelled(eigenbasis_shuffle_basis(alg, words_of_multidegree(degree), [](const Word& w) { return LinComb(word_key(w)); }),
                        word_key);
    if (name == "qsym_F")
        return labelled(eigenbasis_shuffle_basis(alg, compositions_of(n), [](const Word& w) { return qsym_P(w); }),
                        composition_key);
    if (name == "free_assoc")
        return labelled(eigenbasis_free_basis(alg, words_of_multidegree(degree), [](int i) { return word_key({i}); }), word_key);
    if (name == "nsym")
        return labelled(eigenbasis_free_basis(alg, compositions_of(n), [](int i) { return s_word_key({i}); }), s_word_key);
    return eigenbasis_commutative(alg, n);
}

std::vector<EigFunction> left_eigenbasis(const Chain& chain)
{
    auto vectors = default_eigenvectors(*chain.algebra, chain.degree);
    if (std::all_of(vectors.begin(), vectors.end(), [](const EigVector& v) { return v.label_key.has_value(); })) {
        std::sort(vectors.begin(), vectors.end(), [&](const EigVector& u, const EigVector& v) {
            return chain.index(*u.label_key) < chain.index(*v.label_key);
        });
    }
    return left_eigenfunctions(chain, vectors);
}

Rational free_commutative_right_value(const HopfAlgebra& alg, const Key& y, const Key& x)
{
    if (!alg.free_commutative_basis()) throw std::invalid_argument(alg.name() + " has no free-commutative basis");
    if (x.degree != y.degree) return 0;
    const auto factors = alg.factorize(y);
    const int l = static_cast<int>(factors.size());
    const auto& delta = alg.iterated_coproduct(l, x);
    Rational total = 0;
    distinct_arrangement_sum_keys(factors, [&](const std::vector<Key>& arr) { total += delta.coeff(arr); });
    return total / (Rational(factorial(l)) * eta(alg, x));
}

std::vector<EigFunction> dual_right_basis(const Chain& chain, const std::vector<EigFunction>& lefts)
{
    const std::size_t N = chain.states.size();
    if (lefts.size() != N) throw std::invalid_argument("dual_right_basis: need one left eigenfunction per state");
    ExactMatrix G(chain.states, chain.states);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) G(i, j) = lefts[i].values.at(j);
    const ExactMatrix F = inverse(G);
    std::vector<EigFunction> out;
    for (std::size_t i = 0; i < N; ++i) {
        EigFunction f;
        f.side = EigFunction::Side::right;
        f.values = F.column(i);
        f.exponent = lefts[i].exponent;
        f.label = lefts[i].label;
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<EigFunction> right_eigenbasis(const Chain& chain)
{
    const HopfAlgebra& alg = *chain.algebra;
    if (!alg.free_commutative_basis()) return dual_right_basis(chain, left_eigenbasis(chain));
    std::vector<EigFunction> out;
    for (const Key& y : chain.states) {
        EigFunction f;
        f.side = EigFunction::Side::right;
        for (const Key& x : chain.states) f.values.push_back(free_commutative_right_value(alg, y, x));
        f.exponent = factor_count(alg, y);
        f.label = to_string(y);
        out.push_back(std::move(f));
    }
    return out;
}

Rational duality_pairing(const EigFunction& f, const EigFunction& g)
{
    if (f.values.size() != g.values.size()) throw std::invalid_argument("duality_pairing: basis mismatch");
    Rational total = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) total += f.values[i] * g.values[i];
    return total;
}

LumpingReport check_lumping(const std::function<Key(const Key&)>& theta, const Chain& source, const Chain& target)
{
    std::vector<std::size_t> image;
    std::vector<bool> hit(target.states.size(), false);
    for (const Key& x : source.states) {
        const std::size_t j = target.index(theta(x));
        image.push_back(j);
        hit[j] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw std::invalid_argument("check_lumping: map is not surjective onto the target states");

    LumpingReport report;
    report.max_violation = 0;
    const std::size_t M = target.states.size();
    for (std::size_t i = 0; i < source.states.size(); ++i) {
        RationalVector lumped(M);
        for (std::size_t j = 0; j < source.states.size(); ++j) lumped[image[j]] += source.K(i, j);
        for (std::size_t b = 0; b < M; ++b) {
            Rational diff = lumped[b] - target.K(image[i], b);
            if (diff < 0) diff = -diff;
            if (diff > report.max_violation) {
                report.max_violation = diff;
                report.detail = "from " + to_string(source.states[i]) + " to class " + to_string(target.states[b]);
            }
        }
    }
    report.ok = report.max_violation == 0;
    return report;
}

ExactMatrix time_reversal(const Chain& chain)
{
    const auto st = stationary_distributions(chain);
    if (!st.unique) throw std::domain_error("time_reversal: stationary distribution is not unique");
    const auto& pi = st.distributions.front();
    for (const auto& p : pi)
        if (p == 0) throw std::domain_error("time_reversal: stationary distribution has a zero entry");
    ExactMatrix out(chain.states, chain.states);
    for (std::size_t x = 0; x < chain.states.size(); ++x)
        for (std::size_t y = 0; y < chain.states.size(); ++y)
            if (chain.K(y, x) != 0) out(x, y) = pi[y] * chain.K(y, x) / pi[x];
    return out;
}

ExactMatrix matrix_power_via_spectrum(const Chain& chain, int m, const std::vector<EigFunction>& lefts,
                                      const std::vector<EigFunction>& rights)
{
    if (m < 0) throw std::invalid_argument("matrix_power_via_spectrum: m must be nonnegative");
    const std::size_t N = chain.states.size();
    if (lefts.size() != N || rights.size() != N) throw std::invalid_argument("matrix_power_via_spectrum: incomplete bases");
    for (std::size_t i = 0; i < N; ++i) {
        if (lefts[i].exponent != rights[i].exponent)
            throw std::invalid_argument("matrix_power_via_spectrum: eigenvalues of paired functions differ");
        for (std::size_t j = 0; j < N; ++j)
            if (duality_pairing(rights[i], lefts[j]) != (i == j ? 1 : 0))
                throw std::invalid_argument("matrix_power_via_spectrum: bases are not dual");
    }
    ExactMatrix out(chain.states, chain.states);
    for (std::size_t i = 0; i < N; ++i) {
        const Rational beta = rational_pow(eigenvalue(chain, rights[i]), m);
        for (std::size_t x = 0; x < N; ++x) {
            if (rights[i].values[x] == 0) continue;
            const Rational fx = beta * rights[i].values[x];
            for (std::size_t y = 0; y < N; ++y)
                if (lefts[i].values[y] != 0) out(x, y) += fx * lefts[i].values[y];
        }
    }
    return out;
}

int factor_count(const HopfAlgebra& alg, const Key& x)
{
    if (is_unit(x)) return 0;
    return static_cast<int>(alg.factorize(x).size());
}

bool reaches(const Chain& chain, const Key& x, const Key& y)
{
    const std::size_t start = chain.index(x), goal = chain.index(y);
    std::vector<bool> seen(chain.states.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        if (i == goal) return true;
        for (std::size_t j = 0; j < chain.states.size(); ++j)
            if (!seen[j] && chain.K(i, j) != 0) {
                seen[j] = true;
                queue.push_back(j);
            }
    }
    return false;
}

Rational absorption_probability(const Chain& chain, const Key& x0)
{
    const HopfAlgebra& alg = *chain.algebra;
    if (!alg.free_commutative_basis()) throw std::invalid_argument("absorption: " + alg.name() + " has no free-commutative basis");
    const std::size_t i = chain.index(x0);
    Rational total = 0;
    for (std::size_t j = 0; j < chain.states.size(); ++j)
        if (factor_count(alg, chain.states[j]) == chain.n) total += chain.K(i, j);
    return total;
}

Rational absorption_probability_characters(const Chain& chain, const Key& x0)
{
    const HopfAlgebra& alg = *chain.algebra;
    if (!alg.free_commutative_basis()) throw std::invalid_argument("absorption: " + alg.name() + " has no free-commutative basis");
    auto zeta = [&](const Key& z) -> Rational {
        if (factor_count(alg, z) != z.degree) return 0;
        return eta(alg, z) / Rational(factorial(z.degree));
    };
    Rational sum = 0;
    for (const auto& [t, c] : alg.iterated_coproduct(chain.a, x0)) {
        Rational term = c;
        for (const Key& z : t) {
            term *= zeta(z);
            if (term == 0) break;
        }
        sum += term;
    }
    return sum * Rational(factorial(chain.n)) / eta(alg, x0) * rational_pow(Rational(chain.a), -chain.n);
}

namespace {

struct ReachData {
    RationalVector f;
    Rational min_f;
    Rational max_eta;
    int l = 0;
};

ReachData reach_data(const Chain& chain, const Key& y)
{
    const HopfAlgebra& alg = *chain.algebra;
    ReachData d;
    d.l = factor_count(alg, y);
    bool any = false;
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
        const Key& x = chain.states[i];
        d.f.push_back(free_commutative_right_value(alg, y, x));
        if (!reaches(chain, x, y)) continue;
        if (!any || d.f.back() < d.min_f) d.min_f = d.f.back();
        if (!any || chain.eta[i] > d.max_eta) d.max_eta = chain.eta[i];
        any = true;
    }
    if (!any || d.min_f <= 0) throw std::invalid_argument("reachability: " + to_string(y) + " is not reachable");
    return d;
}

}  // namespace

Rational reachability_bound(const Chain& chain, const Key& y, const Key& x0, int m)
{
    const auto d = reach_data(chain, y);
    return rational_pow(Rational(chain.a), (d.l - chain.n) * m) * d.f[chain.index(x0)] / d.min_f;
}

Rational reachability_bound_any_start(const Chain& chain, const Key& y, int m)
{
    const HopfAlgebra& alg = *chain.algebra;
    const auto d = reach_data(chain, y);
    const auto factors = alg.factorize(y);
    std::vector<int> degs;
    for (const Key& c : factors) degs.push_back(c.degree);
    return rational_pow(Rational(chain.a), (d.l - chain.n) * m) / (d.min_f * Rational(stabilizer_size(factors))) /
           eta(alg, y) * Rational(multinomial(degs));
}

Rational reachability_bound_loose(const Chain& chain, const Key& y, const Key& x0, int m)
{
    const auto d = reach_data(chain, y);
    return rational_pow(Rational(chain.a), (d.l - chain.n) * m) * d.f[chain.index(x0)] * Rational(factorial(d.l)) * d.max_eta;
}

Rational generator_right_value(const HopfAlgebra& alg, const Key& c, const Key& x)
{
    if (c.degree < 2) throw std::invalid_argument("generator_right_value: generator must have degree at least 2");
    if (x.degree < c.degree) return 0;
    const auto ones = alg.basis(1);
    if (ones.size() != 1) throw std::invalid_argument("generator_right_value: needs a single degree-one basis element");
    const int L = x.degree - c.degree + 1;
    const auto& delta = alg.iterated_coproduct(L, x);
    Rational total = 0;
    for (int p = 0; p < L; ++p) {
        std::vector<Key> t(static_cast<std::size_t>(L), ones.front());
        t[static_cast<std::size_t>(p)] = c;
        total += delta.coeff(t);
    }
    return Rational(binomial(x.degree, c.degree)) * total / (eta(alg, x) * L);
}

}  // namespace hopfchain
