#include "hopfchain/instances.hpp"

#include "instances_internal.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hopfchain {

namespace {

const std::map<std::string, std::function<std::shared_ptr<const HopfAlgebra>()>>& factories()
{
    static const std::map<std::string, std::function<std::shared_ptr<const HopfAlgebra>()>> table{
        {"shuffle", detail::make_shuffle},     {"free_assoc", detail::make_free_assoc},
        {"sym_h", detail::make_sym_h},         {"sym_schur", detail::make_sym_schur},
        {"graphs", detail::make_graphs},       {"ck_forests", detail::make_ck_forests},
        {"qsym_F", detail::make_qsym},         {"sym_p", detail::make_sym_p},
    };
    return table;
}

std::string strip_prefix(const std::string& text, char prefix)
{
    std::size_t i = 0;
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size() && text[i] == prefix) return text.substr(i + 1);
    return text;
}

}  // namespace

std::shared_ptr<const HopfAlgebra> get_instance(const std::string& name)
{
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const HopfAlgebra>> cache;
    const auto& table = factories();
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown algebra \"" + name + "\"");
    std::lock_guard lock(mutex);
    auto& slot = cache[name];
    if (!slot) slot = it->second();
    return slot;
}

std::vector<std::string> instance_names()
{
    return {"shuffle", "free_assoc", "sym_h", "sym_schur", "graphs", "ck_forests", "qsym_F"};
}

std::shared_ptr<const HopfAlgebra> make_nsym()
{
    static const auto nsym = detail::make_nsym();
    return nsym;
}

Key parse_basis_key(const HopfAlgebra& alg, const std::string& text)
{
    const std::string name = alg.name();
    if (name == "shuffle" || name == "free_assoc") return word_key(parse_int_list(text));
    if (name == "sym_h") return partition_key(parse_int_list(strip_prefix(text, 'h')));
    if (name == "sym_schur") return schur_key(parse_int_list(strip_prefix(text, 's')));
    if (name == "sym_p") return power_sum_key(parse_int_list(strip_prefix(text, 'p')));
    if (name == "qsym_F") return composition_key(parse_int_list(strip_prefix(text, 'F')));
    if (name == "nsym") return s_word_key(parse_int_list(strip_prefix(text, 'S')));
    if (name == "graphs") return parse_graph(text);
    if (name == "ck_forests") return forest_canonicalize(text);
    throw std::invalid_argument("no parser for algebra \"" + name + "\"");
}

}  // namespace hopfchain
