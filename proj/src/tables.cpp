#include "hopfchain/tables.hpp"

#include "hopfchain/named_chains.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopfchain {

std::string render_tsv(const Table& t)
{
    std::string out = t.corner;
    for (const auto& c : t.columns) out += "\t" + c;
    out += "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out += t.rows[i];
        for (const auto& cell : t.cells[i]) out += "\t" + cell;
        out += "\n";
    }
    return out;
}

std::string render_json(const Table& t)
{
    const nlohmann::json j{{"corner", t.corner}, {"columns", t.columns}, {"rows", t.rows}, {"cells", t.cells}};
    return j.dump(2) + "\n";
}

std::vector<Key> table_order(const Chain& chain)
{
    const std::string name = chain.algebra->name();
    std::vector<Key> order;
    if (name == "sym_h") order = rock_table_order(chain.n);
    else if (name == "sym_schur") order = schur_table_order(chain.n);
    else if (name == "qsym_F") order = qsym_table_order(chain.n);
    else return chain.states;
    if (order.size() != chain.states.size()) throw std::logic_error("table order does not match the chain states");
    return order;
}

namespace {

std::vector<std::string> labels(const std::vector<Key>& keys)
{
    std::vector<std::string> out;
    for (const Key& k : keys) out.push_back(to_string(k));
    return out;
}

// eigenfunctions sorted by the position of their label in the table order,
// when every label names a state
std::vector<EigFunction> ordered_functions(const Chain& chain, std::vector<EigFunction> fs)
{
    std::map<std::string, std::size_t> position;
    const auto order = table_order(chain);
    for (std::size_t i = 0; i < order.size(); ++i) position[to_string(order[i])] = i;
    if (std::all_of(fs.begin(), fs.end(), [&](const EigFunction& f) { return position.count(f.label) > 0; }))
        std::stable_sort(fs.begin(), fs.end(),
                         [&](const EigFunction& x, const EigFunction& y) { return position[x.label] < position[y.label]; });
    return fs;
}

std::vector<EigFunction> functions_of(const Chain& chain, EigFunction::Side side)
{
    return ordered_functions(chain, side == EigFunction::Side::left ? left_eigenbasis(chain) : right_eigenbasis(chain));
}

}  // namespace

Table matrix_table(const Chain& chain, const ExactMatrix& m)
{
    const auto order = table_order(chain);
    Table t;
    t.corner = "state";
    t.columns = labels(order);
    t.rows = t.columns;
    for (const Key& x : order) {
        std::vector<std::string> row;
        for (const Key& y : order) row.push_back(to_string(m(m.row_index(x), m.col_index(y))));
        t.cells.push_back(std::move(row));
    }
    return t;
}

Table eigen_table(const Chain& chain, EigFunction::Side side)
{
    const auto order = table_order(chain);
    const auto fs = functions_of(chain, side);
    const std::string prefix = side == EigFunction::Side::left ? "g_" : "f_";
    Table t;
    if (side == EigFunction::Side::right) {
        t.corner = "state";
        for (const auto& f : fs) t.columns.push_back(prefix + f.label);
        for (const Key& x : order) {
            t.rows.push_back(to_string(x));
            std::vector<std::string> row;
            for (const auto& f : fs) row.push_back(to_string(f.values[chain.index(x)]));
            t.cells.push_back(std::move(row));
        }
    } else {
        t.corner = "function";
        t.columns = labels(order);
        for (const auto& f : fs) {
            t.rows.push_back(prefix + f.label);
            std::vector<std::string> row;
            for (const Key& x : order) row.push_back(to_string(f.values[chain.index(x)]));
            t.cells.push_back(std::move(row));
        }
    }
    return t;
}

Table eigenvalue_table(const Chain& chain, EigFunction::Side side)
{
    const std::string prefix = side == EigFunction::Side::left ? "g_" : "f_";
    Table t;
    t.corner = "function";
    t.columns = {"exponent", "eigenvalue"};
    for (const auto& f : functions_of(chain, side)) {
        t.rows.push_back(prefix + f.label);
        t.cells.push_back({std::to_string(f.exponent), to_string(eigenvalue(chain, f))});
    }
    return t;
}

Table stationary_table(const Chain& chain)
{
    const auto st = stationary_distributions(chain);
    Table t;
    t.corner = "state";
    for (const auto& l : st.labels) t.columns.push_back("pi_" + l);
    for (const Key& x : table_order(chain)) {
        t.rows.push_back(to_string(x));
        std::vector<std::string> row;
        for (const auto& pi : st.distributions) row.push_back(to_string(pi[chain.index(x)]));
        t.cells.push_back(std::move(row));
    }
    return t;
}

Table function_table(const std::string& prefix, const std::vector<Key>& functions, const std::vector<Key>& arguments,
                     const std::function<Rational(const Key&, const Key&)>& value, EigFunction::Side side)
{
    Table t;
    if (side == EigFunction::Side::right) {
        t.corner = "state";
        for (const Key& f : functions) t.columns.push_back(prefix + to_string(f));
        for (const Key& x : arguments) {
            t.rows.push_back(to_string(x));
            std::vector<std::string> row;
            for (const Key& f : functions) row.push_back(to_string(value(f, x)));
            t.cells.push_back(std::move(row));
        }
    } else {
        t.corner = "function";
        t.columns = labels(arguments);
        for (const Key& f : functions) {
            t.rows.push_back(prefix + to_string(f));
            std::vector<std::string> row;
            for (const Key& x : arguments) row.push_back(to_string(value(f, x)));
            t.cells.push_back(std::move(row));
        }
    }
    return t;
}

}  // namespace hopfchain
