#include "spherica/dynkin.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace spherica {

namespace {

std::vector<std::pair<int, int>> edge_list(Family family, int rank)
{
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case Family::A:
            if (rank < 1)
                throw std::invalid_argument("A_n requires n >= 1");
            for (int i = 1; i < rank; ++i)
                edges.emplace_back(i, i + 1);
            break;
        case Family::D:
            if (rank < 4)
                throw std::invalid_argument("D_n requires n >= 4");
            for (int i = 1; i < rank - 1; ++i)
                edges.emplace_back(i, i + 1);
            edges.emplace_back(rank - 2, rank);
            break;
        case Family::E:
            if (rank < 6 || rank > 8)
                throw std::invalid_argument("E_n requires n in {6,7,8}");
            edges.emplace_back(1, 3);
            for (int i = 3; i < rank; ++i)
                edges.emplace_back(i, i + 1);
            edges.emplace_back(2, 4);
            break;
        default:
            throw std::invalid_argument("unknown family");
    }
    return edges;
}

int pairing(const std::vector<std::vector<int>>& adj, int node, const Root& r)
{
    int v = 2 * r[node - 1];
    for (int nb : adj[node - 1])
        v -= r[nb - 1];
    return v;
}

std::vector<Root> close_positive_roots(const std::vector<std::vector<int>>& adj, int rank)
{
    std::set<Root> seen;
    std::deque<Root> work;
    for (int i = 0; i < rank; ++i) {
        Root a(rank, 0);
        a[i] = 1;
        seen.insert(a);
        work.push_back(a);
    }
    while (!work.empty()) {
        Root r = work.front();
        work.pop_front();
        for (int i = 1; i <= rank; ++i) {
            Root s = r;
            s[i - 1] -= pairing(adj, i, r);
            if (is_positive_root(s) && seen.insert(s).second)
                work.push_back(s);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

DynkinDiagram::DynkinDiagram(Family family, int rank)
{
    auto edges = edge_list(family, rank);
    auto data = std::make_shared<Data>();
    data->family = family;
    data->rank = rank;
    data->edges = static_cast<int>(edges.size());
    data->adj.assign(rank, {});
    for (auto [i, j] : edges) {
        data->adj[i - 1].push_back(j);
        data->adj[j - 1].push_back(i);
    }
    for (auto& nb : data->adj)
        std::sort(nb.begin(), nb.end());
    data->pos_roots = close_positive_roots(data->adj, rank);
    d_ = std::move(data);
}

bool DynkinDiagram::adjacent(int i, int j) const
{
    const auto& nb = neighbors(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

const std::vector<int>& DynkinDiagram::neighbors(int node) const
{
    if (node < 1 || node > rank())
        throw std::invalid_argument("node out of range: " + std::to_string(node));
    return d_->adj[node - 1];
}

std::string DynkinDiagram::name() const
{
    return std::string(1, static_cast<char>(family())) + std::to_string(rank());
}

bool is_positive_root(const Root& r)
{
    bool nonzero = false;
    for (int c : r) {
        if (c < 0)
            return false;
        if (c > 0)
            nonzero = true;
    }
    return nonzero;
}

bool is_negative_root(const Root& r)
{
    bool nonzero = false;
    for (int c : r) {
        if (c > 0)
            return false;
        if (c < 0)
            nonzero = true;
    }
    return nonzero;
}

Root simple_root(const DynkinDiagram& d, int node)
{
    if (node < 1 || node > d.rank())
        throw std::invalid_argument("node out of range: " + std::to_string(node));
    Root a(d.rank(), 0);
    a[node - 1] = 1;
    return a;
}

int cartan_pairing(const DynkinDiagram& d, int node, const Root& r)
{
    if (node < 1 || node > d.rank())
        throw std::invalid_argument("node out of range: " + std::to_string(node));
    int v = 2 * r[node - 1];
    for (int nb : d.neighbors(node))
        v -= r[nb - 1];
    return v;
}

Root reflect(const DynkinDiagram& d, int node, const Root& r)
{
    Root s = r;
    s[node - 1] -= cartan_pairing(d, node, r);
    return s;
}

const std::vector<Root>& positive_roots(const DynkinDiagram& d)
{
    return d.positive_roots();
}

}  // namespace spherica
