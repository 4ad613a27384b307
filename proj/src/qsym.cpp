#include "instances_internal.hpp"

#include "hopfchain/instances.hpp"
#include "hopfchain/lyndon.hpp"

#include <set>
#include <stdexcept>

namespace hopfchain {

namespace {

Key des_key(const Word& w)
{
    if (w.empty()) return composition_key({});
    return composition_key(descent_composition(w));
}

class QSymF final : public HopfAlgebra {
public:
    std::string name() const override { return "qsym_F"; }
    bool is_commutative() const override { return true; }
    bool is_cocommutative() const override { return false; }
    Key unit() const override { return composition_key({}); }
    std::vector<Key> basis(int n) const override
    {
        std::vector<Key> out;
        for (auto& c : compositions_of(n)) out.push_back(composition_key(std::move(c)));
        return out;
    }

protected:
    LinComb compute_product(const Key& a, const Key& b) const override
    {
        const Word u = descent_representative(a.data);
        Word v = descent_representative(b.data);
        for (int& x : v) x += a.degree;
        LinComb out;
        for (const auto& [w, c] : shuffles(u, v)) out.add(des_key(w), c);
        return out;
    }
    TensorComb compute_coproduct(const Key& x) const override
    {
        const Word u = descent_representative(x.data);
        TensorComb out(2);
        for (std::size_t i = 0; i <= u.size(); ++i)
            out.add({des_key({u.begin(), u.begin() + static_cast<long>(i)}), des_key({u.begin() + static_cast<long>(i), u.end()})}, 1);
        return out;
    }
};

}  // namespace

Key theta_descent(const Word& w)
{
    if (std::set<int>(w.begin(), w.end()).size() != w.size())
        throw std::invalid_argument("theta_descent: letters must be distinct");
    return des_key(w);
}

Word descent_representative(const Composition& I)
{
    int top = 0;
    for (int p : I) top += p;
    Word out;
    for (int p : I) {
        for (int v = top - p + 1; v <= top; ++v) out.push_back(v);
        top -= p;
    }
    return out;
}

LinComb qsym_monomial(const Composition& I)
{
    LinComb out;
    for (const auto& J : refinements_of(I))
        out.add(composition_key(J), (J.size() - I.size()) % 2 == 0 ? 1 : -1);
    return out;
}

LinComb qsym_P(const Composition& I)
{
    LinComb out;
    for (const auto& J : coarsenings_of(I)) {
        Integer denom = 1;
        for (const auto& piece : relative_decomposition(I, J)) denom *= factorial(static_cast<int>(piece.size()));
        out += Rational(1, denom) * qsym_monomial(J);
    }
    return out;
}

namespace detail {

std::shared_ptr<const HopfAlgebra> make_qsym() { return std::make_shared<QSymF>(); }

}  // namespace detail

}  // namespace hopfchain
