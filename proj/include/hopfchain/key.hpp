#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hopfchain {

enum class KeyKind : std::uint8_t {
    word,         // letters; shuffle and free associative algebras
    s_word,       // word in the graded letters S^i of NSym; letter i has degree i
    partition,    // h_lambda
    schur,        // s_lambda
    power_sum,    // p_lambda
    composition,  // F_I
    graph,        // data = {n, upper-triangle adjacency bits in canonical labelling}
    forest,       // data = bracket code, 1 opens a vertex and 0 closes it
};

// A basis element. Ordering is (kind, degree, data), which gives deterministic
// iteration order inside LinComb and golden files.
struct Key {
    KeyKind kind = KeyKind::word;
    int degree = 0;
    std::vector<int> data;

    friend bool operator==(const Key&, const Key&) = default;
    friend std::strong_ordering operator<=>(const Key&, const Key&) = default;
};

Key word_key(std::vector<int> letters);
Key s_word_key(std::vector<int> letters);
Key partition_key(std::vector<int> parts);  // sorted into weakly decreasing order
Key schur_key(std::vector<int> parts);
Key power_sum_key(std::vector<int> parts);
Key composition_key(std::vector<int> parts);

bool is_unit(const Key& k);

// Canonical text form: "(31421)", "(10,2,1)", "(3,1)", "s(2,1)", "p(2,1)",
// "S(1,2)", "n=3; 1-2,2-3", "[*[**]]". Units print as "()" or "1".
std::string to_string(const Key& k);

// Parses "(3,5,2,1)" or "(31421)" into integers. Digit strings without commas
// are read one digit per letter.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace hopfchain
