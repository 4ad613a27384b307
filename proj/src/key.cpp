#include "hopfchain/key.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hopfchain {

namespace {

Key make(KeyKind kind, std::vector<int> data, int degree)
{
    return Key{kind, degree, std::move(data)};
}

int sum_of(const std::vector<int>& v)
{
    return std::accumulate(v.begin(), v.end(), 0);
}

void require_positive(const std::vector<int>& v, const char* what)
{
    for (int x : v)
        if (x <= 0) throw std::invalid_argument(std::string(what) + " entries must be positive");
}

std::string int_tuple(const std::vector<int>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string word_text(const std::vector<int>& letters)
{
    const bool digits = std::all_of(letters.begin(), letters.end(), [](int x) { return x >= 1 && x <= 9; });
    if (!digits) return int_tuple(letters);
    std::string out = "(";
    for (int x : letters) out += static_cast<char>('0' + x);
    return out + ")";
}

std::string graph_text(const std::vector<int>& data)
{
    const int n = data.at(0);
    std::string out = "n=" + std::to_string(n) + ";";
    std::size_t bit = 1;
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (data.at(bit)) {
                out += first ? " " : ",";
                first = false;
                out += std::to_string(i + 1) + "-" + std::to_string(j + 1);
            }
    return out;
}

// code: 1 <children> 0 per vertex
std::string forest_text(const std::vector<int>& code)
{
    if (code.empty()) return "1";
    std::string out;
    std::size_t pos = 0;
    std::function<void()> tree = [&]() {
        ++pos;  // the opening 1
        if (code.at(pos) == 0) {
            out += '*';
            ++pos;
            return;
        }
        out += '[';
        while (code.at(pos) == 1) tree();
        out += ']';
        ++pos;
    };
    while (pos < code.size()) tree();
    return out;
}

}  // namespace

Key word_key(std::vector<int> letters)
{
    require_positive(letters, "word");
    const int n = static_cast<int>(letters.size());
    return make(KeyKind::word, std::move(letters), n);
}

Key s_word_key(std::vector<int> letters)
{
    require_positive(letters, "S-word");
    const int d = sum_of(letters);
    return make(KeyKind::s_word, std::move(letters), d);
}

Key partition_key(std::vector<int> parts)
{
    require_positive(parts, "partition");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    const int d = sum_of(parts);
    return make(KeyKind::partition, std::move(parts), d);
}

Key schur_key(std::vector<int> parts)
{
    require_positive(parts, "partition");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    const int d = sum_of(parts);
    return make(KeyKind::schur, std::move(parts), d);
}

Key power_sum_key(std::vector<int> parts)
{
    require_positive(parts, "partition");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    const int d = sum_of(parts);
    return make(KeyKind::power_sum, std::move(parts), d);
}

Key composition_key(std::vector<int> parts)
{
    require_positive(parts, "composition");
    const int d = sum_of(parts);
    return make(KeyKind::composition, std::move(parts), d);
}

bool is_unit(const Key& k)
{
    return k.degree == 0;
}

std::string to_string(const Key& k)
{
    switch (k.kind) {
    case KeyKind::word: return word_text(k.data);
    case KeyKind::s_word: return "S" + int_tuple(k.data);
    case KeyKind::partition: return int_tuple(k.data);
    case KeyKind::schur: return "s" + int_tuple(k.data);
    case KeyKind::power_sum: return "p" + int_tuple(k.data);
    case KeyKind::composition: return int_tuple(k.data);
    case KeyKind::graph: return graph_text(k.data);
    case KeyKind::forest: return forest_text(k.data);
    }
    return "?";
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::string body;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) body += c;
    if (!body.empty() && body.front() == '(') body.erase(body.begin());
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::vector<int> out;
    if (body.empty()) return out;
    if (body.find(',') == std::string::npos) {
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad integer list: " + text);
            out.push_back(c - '0');
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= body.size()) {
        const auto comma = body.find(',', start);
        const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad integer list: " + text);
        out.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace hopfchain
