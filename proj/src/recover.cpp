#include "spherica/recover.hpp"

#include <random>

namespace spherica {

RecoveryResult recover(const TwistedComplex& c, const DynkinDiagram& d, TieBreak tb,
                       unsigned seed)
{
    if (c.algebra().diagram() != d)
        throw std::invalid_argument("complex and diagram do not match");
    auto alg = c.algebra_ptr();
    auto base = probe(TwistedComplex::spherical_sum(alg));
    auto w0 = longest_element(d);
    std::mt19937 rng(seed);

    RecoveryResult res{GarsideNormalForm{d, 0, {}}, {}, {}};
    auto cur = gauss_eliminate(c);
    auto table = probe(cur);
    res.tables.push_back(table);

    while (table.max_degree && *table.max_degree > 2) {
        const int k = *table.max_degree - 2;
        auto factor = WeylElement::identity(d);
        while (true) {
            if (table.top_nodes.empty())
                throw RecoveryError("probe maximum above 2 with no attaining node");
            int i = table.top_nodes.front();
            if (tb == TieBreak::Random) {
                std::uniform_int_distribution<std::size_t> pick(0, table.top_nodes.size() - 1);
                i = table.top_nodes[pick(rng)];
            }
            res.steps.push_back({*table.max_degree, i});
            auto extended = factor * WeylElement::generator(d, i);
            if (extended.length() <= factor.length())
                throw RecoveryError("strip sequence is not a reduced word");
            factor = extended;
            cur = untwist(i, cur);
            table = probe(cur);
            res.tables.push_back(table);
            if (!table.max_degree || *table.max_degree < k + 2)
                break;
        }
        if (factor.is_identity())
            throw RecoveryError("recovered an identity factor");
        res.nf.factors.push_back(factor);
    }

    if (!(table == base))
        throw RecoveryError("residual complex is not the trivial action");

    while (!res.nf.factors.empty() && res.nf.factors.back() == w0) {
        res.nf.factors.pop_back();
        ++res.nf.delta_power;
    }
    return res;
}

bool distinguish(const BraidWord& a, const BraidWord& b, int characteristic)
{
    if (a.diagram() != b.diagram())
        throw std::invalid_argument("braid words over different diagrams");
    if (!a.positive() || !b.positive())
        throw std::invalid_argument("distinguish requires positive words");
    auto alg = make_zigzag_algebra(a.diagram(), characteristic);
    auto base = TwistedComplex::spherical_sum(alg);
    auto ra = recover(twist_word(a, base), a.diagram());
    auto rb = recover(twist_word(b, base), b.diagram());
    return ra.tables != rb.tables;
}

}  // namespace spherica
