#pragma once

#include "hopfchain/combinatorics.hpp"
#include "hopfchain/hopf.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hopfchain {

// "shuffle", "free_assoc", "sym_h", "sym_schur", "graphs", "ck_forests",
// "qsym_F", and "sym_p" (power sums, kept for negative validation).
// Instances are shared singletons; throws std::invalid_argument on unknown names.
std::shared_ptr<const HopfAlgebra> get_instance(const std::string& name);
std::vector<std::string> instance_names();

// Free associative algebra on letters S^1, S^2, ... with deg S^i = i.
std::shared_ptr<const HopfAlgebra> make_nsym();

// Parses a basis element written in the instance's text form.
Key parse_basis_key(const HopfAlgebra& alg, const std::string& text);

// Graphs. Vertices are 0-based here and 1-based in text.
using Edge = std::pair<int, int>;
Key graph_canonicalize(int n, const std::vector<Edge>& edges);
Key parse_graph(const std::string& text);  // "n=5; 1-2,2-3"
int graph_order(const Key& g);
std::vector<Edge> graph_edges(const Key& g);
std::vector<std::vector<bool>> graph_adjacency(const Key& g);
Key induced_subgraph(const Key& g, const std::vector<int>& vertices);
bool graph_connected(const Key& g);
Key disjoint_union(const Key& a, const Key& b);

// Rooted forests in bracket notation: "*" is a single vertex, "[T1...Tf]" a
// root with children T1..Tf, juxtaposition a product of trees.
Key forest_canonicalize(const std::string& expr);
Key make_forest(const std::vector<Key>& trees);
Key make_tree(const std::vector<Key>& children);  // new root over the given trees
std::vector<Key> forest_trees(const Key& forest);
std::vector<Key> tree_children(const Key& tree);
Key path_tree(int n);  // P_n

// Vertices in preorder; parent[v] < v, or -1 for roots.
struct ForestShape {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> desc;  // descendant counts, self-inclusive

    int size() const { return static_cast<int>(parent.size()); }
};
ForestShape forest_shape(const Key& forest);
// Forest spanned by the vertices with keep[v], joined by the parent edges
// between kept vertices.
Key forest_from_parents(const std::vector<int>& parent, const std::vector<bool>& keep);

// Des of a word with distinct letters; throws on repeated letters.
Key theta_descent(const Word& w);

// Word with distinct letters 1..|I| whose descent composition is I.
Word descent_representative(const Composition& I);

// Quasisymmetric bases expanded in the fundamental basis.
LinComb qsym_monomial(const Composition& I);
LinComb qsym_P(const Composition& I);

// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka_number(const Partition& lambda, const Composition& mu);
// h_mu in the Schur basis and s_lambda in the h basis.
LinComb h_to_schur(const Partition& mu);
LinComb schur_to_h(const Partition& lambda);

}  // namespace hopfchain
