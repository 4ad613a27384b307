#pragma once

#include "hopfchain/chain.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hopfchain {

struct Table {
    std::string corner;
    std::vector<std::string> columns;
    std::vector<std::string> rows;
    std::vector<std::vector<std::string>> cells;
};

// Tab-separated, header line first, "\n" line ends.
std::string render_tsv(const Table& t);
// {"corner":..., "columns":[...], "rows":[...], "cells":[[...]]}
std::string render_json(const Table& t);

// Published table order for sym_h, sym_schur (n=3) and qsym_F (n=4), else the
// chain's own state order.
std::vector<Key> table_order(const Chain& chain);

Table matrix_table(const Chain& chain, const ExactMatrix& m);
// Right: one column per eigenfunction, rows are states. Left: one row per
// eigenfunction, columns are states. Eigenfunctions indexed by states follow
// the table order.
Table eigen_table(const Chain& chain, EigFunction::Side side);
// "function", "exponent", "eigenvalue" per eigenfunction.
Table eigenvalue_table(const Chain& chain, EigFunction::Side side);
Table stationary_table(const Chain& chain);

// Right layout: rows are the arguments, columns the functions value(fn, arg).
Table function_table(const std::string& prefix, const std::vector<Key>& functions, const std::vector<Key>& arguments,
                     const std::function<Rational(const Key&, const Key&)>& value, EigFunction::Side side);

}  // namespace hopfchain
