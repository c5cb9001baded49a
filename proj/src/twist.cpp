#include "spherica/twist.hpp"

#include <sstream>

namespace spherica {

namespace {

// Generator indices for the hom-side copies of S_node: basis element t of
// degree d becomes a copy of S_node whose cone position is pos_of(d).
struct HomSideIndex {
    std::map<std::pair<int, int>, int> id;  // (degree, basis position) -> generator index
};

}  // namespace

TwistedComplex twist_unreduced(int node, const TwistedComplex& c)
{
    auto alg = c.algebra_ptr();
    auto s = TwistedComplex::spherical(alg, node);
    auto h = hom_complex(s, c);

    std::vector<Generator> gens;
    TwistedComplex::Diff diff;
    HomSideIndex hs;
    for (const auto& [deg, vec] : h.basis)
        for (int t = 0; t < static_cast<int>(vec.size()); ++t) {
            hs.id[{deg, t}] = static_cast<int>(gens.size());
            gens.push_back({node, deg - 1});
        }
    const int off = static_cast<int>(gens.size());
    for (const auto& g : c.generators())
        gens.push_back(g);

    // hom-side internal differential, negated by the cone convention
    for (const auto& [deg, m] : h.vc.diff)
        for (int col = 0; col < m.cols; ++col)
            for (int row = 0; row < m.rows; ++row)
                if (m.at(row, col) != 0)
                    diff[{hs.id.at({deg, col}), hs.id.at({deg + 1, row})}] = -m.at(row, col);

    // evaluation: the basis element (s -> h_gen, path) maps into C by its path
    for (const auto& [deg, vec] : h.basis)
        for (int t = 0; t < static_cast<int>(vec.size()); ++t)
            diff[{hs.id.at({deg, t}), off + vec[t].to}] = 1;

    for (const auto& [key, coeff] : c.differential())
        diff[{off + key.first, off + key.second}] = coeff;

    return TwistedComplex(alg, std::move(gens), std::move(diff));
}

TwistedComplex twist(int node, const TwistedComplex& c)
{
    return gauss_eliminate(twist_unreduced(node, c));
}

TwistedComplex untwist_unreduced(int node, const TwistedComplex& c)
{
    auto alg = c.algebra_ptr();
    auto s = TwistedComplex::spherical(alg, node);
    auto h = hom_complex(c, s);
    const int p = alg->characteristic();

    std::vector<Generator> gens;
    TwistedComplex::Diff diff;
    for (const auto& g : c.generators())
        gens.push_back(g);
    HomSideIndex hs;
    for (const auto& [deg, vec] : h.basis)
        for (int t = 0; t < static_cast<int>(vec.size()); ++t) {
            hs.id[{deg, t}] = static_cast<int>(gens.size());
            gens.push_back({node, 1 - deg});
        }

    for (const auto& [key, coeff] : c.differential())
        diff[{key.first, key.second}] = fp_normalize(-coeff, p);

    // coevaluation: generator g feeds every basis element supported on g
    for (const auto& [deg, vec] : h.basis)
        for (int t = 0; t < static_cast<int>(vec.size()); ++t)
            diff[{vec[t].from, hs.id.at({deg, t})}] = 1;

    // dual internal differential: entry from u_{f'} to u_f is the coefficient
    // of f' in f o delta_C
    for (const auto& [deg, vec] : h.basis)
        for (int t = 0; t < static_cast<int>(vec.size()); ++t) {
            const auto& f = vec[t];
            for (const auto& [key, coeff] : c.differential()) {
                if (key.second != f.from)
                    continue;
                auto prod = alg->multiply(f.path, c.entry_path(key.first, key.second));
                if (!prod)
                    continue;
                auto [fdeg, fpos] = h.index.at({key.first, f.to, prod->degree});
                diff[{hs.id.at({fdeg, fpos}), hs.id.at({deg, t})}] = coeff;
            }
        }

    return TwistedComplex(alg, std::move(gens), std::move(diff));
}

TwistedComplex untwist(int node, const TwistedComplex& c)
{
    return gauss_eliminate(untwist_unreduced(node, c));
}

TwistedComplex twist_word(const BraidWord& word, const TwistedComplex& c)
{
    if (word.diagram() != c.algebra().diagram())
        throw std::invalid_argument("braid word and complex over different diagrams");
    auto out = c;
    const auto& letters = word.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out = it->sign > 0 ? twist(it->node, out) : untwist(it->node, out);
    return out;
}

ProbeTable probe(const TwistedComplex& c)
{
    ProbeTable t;
    auto alg = c.algebra_ptr();
    for (int i = 1; i <= alg->diagram().rank(); ++i) {
        auto dims = hom_dims(TwistedComplex::spherical(alg, i), c);
        if (!dims.empty())
            t.rows[i] = std::move(dims);
    }
    for (const auto& [node, row] : t.rows)
        for (const auto& [deg, dim] : row) {
            (void)dim;
            if (!t.max_degree || deg > *t.max_degree)
                t.max_degree = deg;
        }
    if (t.max_degree)
        for (const auto& [node, row] : t.rows)
            if (row.count(*t.max_degree))
                t.top_nodes.push_back(node);
    return t;
}

std::string ProbeTable::str() const
{
    std::ostringstream out;
    if (rows.empty()) {
        out << "(empty table)\n";
        return out.str();
    }
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [node, row] : rows)
        for (const auto& [deg, dim] : row) {
            (void)dim;
            if (first) {
                lo = hi = deg;
                first = false;
            } else {
                lo = std::min(lo, deg);
                hi = std::max(hi, deg);
            }
        }
    out << "degree:";
    for (int d = lo; d <= hi; ++d)
        out << '\t' << d;
    out << '\n';
    for (const auto& [node, row] : rows) {
        out << "node " << node << ':';
        for (int d = lo; d <= hi; ++d) {
            out << '\t';
            auto it = row.find(d);
            out << (it == row.end() ? 0 : it->second);
        }
        out << '\n';
    }
    out << "max degree = " << (max_degree ? std::to_string(*max_degree) : "none") << '\n';
    out << "top nodes =";
    for (int n : top_nodes)
        out << ' ' << n;
    out << '\n';
    return out.str();
}

std::string ProbeTable::machine_rows() const
{
    std::ostringstream out;
    for (const auto& [node, row] : rows)
        for (const auto& [deg, dim] : row)
            out << node << ' ' << deg << ' ' << dim << '\n';
    return out.str();
}

}  // namespace spherica
