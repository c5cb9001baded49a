#include "spherica/zigzag.hpp"

#include <algorithm>
#include <sstream>

namespace spherica {

ZigzagAlgebra::ZigzagAlgebra(DynkinDiagram d, int characteristic)
    : diagram_(std::move(d)), p_(characteristic)
{
    if (!is_prime(p_))
        throw FieldError("field characteristic must be prime, got " + std::to_string(p_));
}

std::optional<Path> ZigzagAlgebra::path(int from, int to, int degree) const
{
    if (from < 1 || from > diagram_.rank() || to < 1 || to > diagram_.rank())
        return std::nullopt;
    switch (degree) {
        case 0:
        case 2:
            if (from == to)
                return Path{from, to, degree};
            return std::nullopt;
        case 1:
            if (diagram_.adjacent(from, to))
                return Path{from, to, degree};
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::optional<Path> ZigzagAlgebra::multiply(const Path& later, const Path& earlier) const
{
    if (later.source != earlier.target)
        return std::nullopt;
    if (later.degree == 0)
        return earlier;
    if (earlier.degree == 0)
        return later;
    if (later.degree + earlier.degree > 2)
        return std::nullopt;
    // two arrows compose to a loop iff the path returns to its start
    if (later.target != earlier.source)
        return std::nullopt;
    return Path{earlier.source, later.target, 2};
}

std::string ZigzagAlgebra::path_token(const Path& p) const
{
    std::ostringstream out;
    if (p.degree == 0)
        out << 'e' << p.source;
    else if (p.degree == 1)
        out << 'a' << p.source << '>' << p.target;
    else
        out << 'X' << p.source;
    return out.str();
}

std::shared_ptr<const ZigzagAlgebra> make_zigzag_algebra(const DynkinDiagram& d,
                                                         int characteristic)
{
    return std::make_shared<const ZigzagAlgebra>(d, characteristic);
}

TwistedComplex::TwistedComplex(std::shared_ptr<const ZigzagAlgebra> alg,
                               std::vector<Generator> gens, Diff diff)
    : alg_(std::move(alg)), gens_(std::move(gens)), diff_(std::move(diff))
{
    if (!alg_)
        throw std::invalid_argument("twisted complex needs an algebra");
    const int p = alg_->characteristic();
    const int n = static_cast<int>(gens_.size());
    for (const auto& g : gens_)
        if (g.node < 1 || g.node > alg_->diagram().rank())
            throw std::logic_error("generator node out of range");

    for (auto it = diff_.begin(); it != diff_.end();) {
        auto [from, to] = it->first;
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw std::logic_error("differential entry out of range");
        it->second = fp_normalize(it->second, p);
        if (it->second == 0) {
            it = diff_.erase(it);
            continue;
        }
        int need = 1 + gens_[from].position - gens_[to].position;
        if (!alg_->path(gens_[from].node, gens_[to].node, need))
            throw std::logic_error("differential entry violates the degree rule");
        ++it;
    }

    // delta^2 = 0, as a plain matrix product over the algebra
    std::map<std::pair<int, int>, int> square;
    for (const auto& [key1, c1] : diff_) {
        auto [g, h] = key1;
        auto lo = diff_.lower_bound({h, 0});
        for (auto it = lo; it != diff_.end() && it->first.first == h; ++it) {
            auto [h2, y] = it->first;
            auto prod = alg_->multiply(entry_path(h, y), entry_path(g, h));
            if (!prod)
                continue;
            auto& acc = square[{g, y}];
            acc = fp_normalize(acc + static_cast<long long>(c1) * it->second, p);
        }
    }
    for (const auto& [key, c] : square)
        if (c != 0)
            throw std::logic_error("differential does not square to zero");
}

Path TwistedComplex::entry_path(int from, int to) const
{
    int need = 1 + gens_[from].position - gens_[to].position;
    auto p = alg_->path(gens_[from].node, gens_[to].node, need);
    if (!p)
        throw std::logic_error("no path for differential entry");
    return *p;
}

TwistedComplex TwistedComplex::spherical(std::shared_ptr<const ZigzagAlgebra> alg, int node)
{
    if (node < 1 || node > alg->diagram().rank())
        throw std::invalid_argument("node out of range: " + std::to_string(node));
    return TwistedComplex(std::move(alg), {Generator{node, 0}}, {});
}

TwistedComplex TwistedComplex::spherical_sum(std::shared_ptr<const ZigzagAlgebra> alg)
{
    std::vector<Generator> gens;
    for (int i = 1; i <= alg->diagram().rank(); ++i)
        gens.push_back({i, 0});
    return TwistedComplex(std::move(alg), std::move(gens), {});
}

TwistedComplex TwistedComplex::shift(int k) const
{
    auto gens = gens_;
    for (auto& g : gens)
        g.position -= k;
    return TwistedComplex(alg_, std::move(gens), diff_);
}

TwistedComplex TwistedComplex::direct_sum(const TwistedComplex& other) const
{
    if (algebra().diagram() != other.algebra().diagram() ||
        algebra().characteristic() != other.algebra().characteristic())
        throw std::invalid_argument("direct sum over different algebras");
    auto gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    auto diff = diff_;
    int off = static_cast<int>(gens_.size());
    for (const auto& [key, c] : other.diff_)
        diff[{key.first + off, key.second + off}] = c;
    return TwistedComplex(alg_, std::move(gens), std::move(diff));
}

std::vector<std::pair<int, int>> TwistedComplex::census() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_)
        out.emplace_back(g.node, g.position);
    std::sort(out.begin(), out.end());
    return out;
}

std::string TwistedComplex::dump() const
{
    std::ostringstream out;
    out << "generators\n";
    for (const auto& g : gens_)
        out << g.node << ' ' << g.position << '\n';
    out << "differential\n";
    for (const auto& [key, c] : diff_)
        out << key.first << ' ' << key.second << ' '
            << alg_->path_token(entry_path(key.first, key.second)) << ' ' << c << '\n';
    return out.str();
}

TwistedComplex gauss_eliminate(const TwistedComplex& c)
{
    const auto& alg = c.algebra();
    const int p = alg.characteristic();
    auto gens = c.generators();
    auto diff = c.differential();

    while (true) {
        // an invertible entry is a nonzero multiple of an idempotent
        std::pair<int, int> pivot{-1, -1};
        for (const auto& [key, coeff] : diff) {
            (void)coeff;
            auto [g, h] = key;
            if (gens[g].node == gens[h].node && gens[h].position == gens[g].position + 1) {
                pivot = key;
                break;
            }
        }
        if (pivot.first < 0)
            break;

        auto [g, h] = pivot;
        int cinv = fp_inv(diff.at(pivot), p);
        std::vector<std::pair<int, int>> outs;   // (y, coeff) entries g -> y, y != h
        std::vector<std::pair<int, int>> ins;    // (x, coeff) entries x -> h, x != g
        for (const auto& [key, coeff] : diff) {
            if (key.first == g && key.second != h)
                outs.emplace_back(key.second, coeff);
            if (key.second == h && key.first != g)
                ins.emplace_back(key.first, coeff);
        }
        for (auto [x, bx] : ins)
            for (auto [y, ay] : outs) {
                auto prod = alg.multiply(c.algebra().path(gens[g].node, gens[y].node,
                                                          1 + gens[g].position - gens[y].position)
                                             .value(),
                                         alg.path(gens[x].node, gens[h].node,
                                                  1 + gens[x].position - gens[h].position)
                                             .value());
                if (!prod)
                    continue;
                auto& cell = diff[{x, y}];
                cell = fp_normalize(cell - static_cast<long long>(ay) * cinv % p * bx, p);
                if (cell == 0)
                    diff.erase({x, y});
            }

        // drop g and h, reindex
        std::vector<int> remap(gens.size(), -1);
        std::vector<Generator> ngens;
        for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
            if (i == g || i == h)
                continue;
            remap[i] = static_cast<int>(ngens.size());
            ngens.push_back(gens[i]);
        }
        TwistedComplex::Diff ndiff;
        for (const auto& [key, coeff] : diff) {
            auto [x, y] = key;
            if (x == g || x == h || y == g || y == h)
                continue;
            ndiff[{remap[x], remap[y]}] = coeff;
        }
        gens = std::move(ngens);
        diff = std::move(ndiff);
    }
    return TwistedComplex(c.algebra_ptr(), std::move(gens), std::move(diff));
}

std::map<int, int> cohomology_dims(const VectorComplex& v)
{
    std::map<int, int> ranks;
    for (const auto& [d, m] : v.diff)
        ranks[d] = fp_rank(m, v.p);
    std::map<int, int> out;
    for (const auto& [d, dim] : v.dims) {
        int r_out = ranks.count(d) ? ranks.at(d) : 0;
        int r_in = ranks.count(d - 1) ? ranks.at(d - 1) : 0;
        int h = dim - r_out - r_in;
        if (h < 0)
            throw std::logic_error("negative cohomology dimension");
        if (h > 0)
            out[d] = h;
    }
    return out;
}

HomComplex hom_complex(const TwistedComplex& c, const TwistedComplex& d)
{
    if (c.algebra().diagram() != d.algebra().diagram() ||
        c.algebra().characteristic() != d.algebra().characteristic())
        throw std::invalid_argument("hom complex over different algebras");
    const auto& alg = c.algebra();
    const int p = alg.characteristic();

    HomComplex h;
    h.alg = c.algebra_ptr();
    h.vc.p = p;

    const auto& cg = c.generators();
    const auto& dg = d.generators();
    for (int from = 0; from < static_cast<int>(cg.size()); ++from)
        for (int to = 0; to < static_cast<int>(dg.size()); ++to)
            for (int pd = 0; pd <= 2; ++pd) {
                auto path = alg.path(cg[from].node, dg[to].node, pd);
                if (!path)
                    continue;
                int deg = pd - cg[from].position + dg[to].position;
                auto& vec = h.basis[deg];
                h.index[{from, to, pd}] = {deg, static_cast<int>(vec.size())};
                vec.push_back({from, to, *path});
            }
    for (const auto& [deg, vec] : h.basis)
        h.vc.dims[deg] = static_cast<int>(vec.size());

    // differential: f -> delta_D o f - (-1)^{deg f} f o delta_C
    for (const auto& [deg, vec] : h.basis) {
        auto next = h.basis.find(deg + 1);
        if (next == h.basis.end())
            continue;
        FpMat m(static_cast<int>(next->second.size()), static_cast<int>(vec.size()));
        int sign = (deg % 2 == 0) ? -1 : 1;  // -(-1)^deg
        for (int col = 0; col < static_cast<int>(vec.size()); ++col) {
            const auto& f = vec[col];
            for (const auto& [key, coeff] : d.differential()) {
                if (key.first != f.to)
                    continue;
                auto prod = alg.multiply(d.entry_path(key.first, key.second), f.path);
                if (!prod)
                    continue;
                auto [tdeg, row] = h.index.at({f.from, key.second, prod->degree});
                (void)tdeg;
                m.at(row, col) = fp_normalize(m.at(row, col) + coeff, p);
            }
            for (const auto& [key, coeff] : c.differential()) {
                if (key.second != f.from)
                    continue;
                auto prod = alg.multiply(f.path, c.entry_path(key.first, key.second));
                if (!prod)
                    continue;
                auto [tdeg, row] = h.index.at({key.first, f.to, prod->degree});
                (void)tdeg;
                m.at(row, col) =
                    fp_normalize(m.at(row, col) + static_cast<long long>(sign) * coeff, p);
            }
        }
        h.vc.diff[deg] = std::move(m);
    }

    // partial^2 = 0
    for (const auto& [deg, m] : h.vc.diff) {
        auto next = h.vc.diff.find(deg + 1);
        if (next == h.vc.diff.end())
            continue;
        auto sq = fp_mul(next->second, m, p);
        for (int v : sq.a)
            if (v != 0)
                throw std::logic_error("hom differential does not square to zero");
    }
    return h;
}

std::map<int, int> hom_dims(const TwistedComplex& c, const TwistedComplex& d)
{
    return cohomology_dims(hom_complex(c, d).vc);
}

bool is_cocycle(const HomComplex& h, int degree, const std::vector<int>& v)
{
    auto it = h.vc.diff.find(degree);
    if (it == h.vc.diff.end())
        return true;
    const auto& m = it->second;
    if (static_cast<int>(v.size()) != m.cols)
        throw std::invalid_argument("cochain has the wrong dimension");
    for (int r = 0; r < m.rows; ++r) {
        long long acc = 0;
        for (int c = 0; c < m.cols; ++c)
            acc += static_cast<long long>(m.at(r, c)) * v[c];
        if (fp_normalize(acc, h.p()) != 0)
            return false;
    }
    return true;
}

std::vector<int> compose(const HomComplex& hxy, int deg_f, const std::vector<int>& f,
                         const HomComplex& hyz, int deg_g, const std::vector<int>& g,
                         const HomComplex& hxz)
{
    if (!is_cocycle(hxy, deg_f, f) || !is_cocycle(hyz, deg_g, g))
        throw std::invalid_argument("compose requires cocycles");
    const auto& alg = *hxz.alg;
    const int p = hxz.p();
    auto bf = hxy.basis.find(deg_f);
    auto bg = hyz.basis.find(deg_g);
    int out_dim = hxz.vc.dims.count(deg_f + deg_g) ? hxz.vc.dims.at(deg_f + deg_g) : 0;
    std::vector<int> out(out_dim, 0);
    if (bf == hxy.basis.end() || bg == hyz.basis.end())
        return out;
    for (std::size_t i = 0; i < bf->second.size(); ++i) {
        if (f[i] == 0)
            continue;
        const auto& ef = bf->second[i];
        for (std::size_t j = 0; j < bg->second.size(); ++j) {
            if (g[j] == 0)
                continue;
            const auto& eg = bg->second[j];
            if (eg.from != ef.to)
                continue;
            auto prod = alg.multiply(eg.path, ef.path);
            if (!prod)
                continue;
            auto [deg, idx] = hxz.index.at({ef.from, eg.to, prod->degree});
            if (deg != deg_f + deg_g)
                throw std::logic_error("composite lands in the wrong degree");
            out[idx] = fp_normalize(out[idx] + static_cast<long long>(f[i]) * g[j], p);
        }
    }
    return out;
}

std::vector<int> identity_cocycle(const HomComplex& hxx)
{
    auto it = hxx.basis.find(0);
    if (it == hxx.basis.end())
        return {};
    std::vector<int> v(it->second.size(), 0);
    for (std::size_t i = 0; i < it->second.size(); ++i) {
        const auto& e = it->second[i];
        if (e.from == e.to && e.path.degree == 0)
            v[i] = 1;
    }
    return v;
}

bool same_class(const HomComplex& h, int degree, const std::vector<int>& a,
                const std::vector<int>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("cochain dimension mismatch");
    std::vector<int> delta(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        delta[i] = fp_normalize(static_cast<long long>(a[i]) - b[i], h.p());
    auto it = h.vc.diff.find(degree - 1);
    if (it == h.vc.diff.end()) {
        for (int v : delta)
            if (v != 0)
                return false;
        return true;
    }
    return fp_in_span(it->second, delta, h.p());
}

}  // namespace spherica
