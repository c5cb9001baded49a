#include "spherica/oracle.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace spherica::oracle {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Raw matrix model kept local on purpose: the oracle multiplies matrices and
// counts inversions with its own code so that it checks the library rather
// than reusing it.
using Mat = std::vector<int>;

Mat mat_identity(int n)
{
    Mat m(n * n, 0);
    for (int i = 0; i < n; ++i)
        m[i * n + i] = 1;
    return m;
}

Mat mat_generator(const DynkinDiagram& d, int node)
{
    int n = d.rank();
    Mat m = mat_identity(n);
    m[(node - 1) * n + (node - 1)] = -1;
    for (int nb : d.neighbors(node))
        m[(node - 1) * n + (nb - 1)] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int n)
{
    Mat m(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = a[i * n + k];
            if (x == 0)
                continue;
            for (int j = 0; j < n; ++j)
                m[i * n + j] += x * b[k * n + j];
        }
    return m;
}

int mat_inversions(const DynkinDiagram& d, const Mat& m)
{
    int n = d.rank();
    int count = 0;
    for (const Root& beta : d.positive_roots()) {
        bool nonpos = true;
        for (int i = 0; i < n && nonpos; ++i) {
            int acc = 0;
            for (int j = 0; j < n; ++j)
                acc += m[i * n + j] * beta[j];
            if (acc > 0)
                nonpos = false;
        }
        if (nonpos)
            ++count;
    }
    return count;
}

}  // namespace

bool brute_equal_positive(const BraidWord& a, const BraidWord& b, int length_cap)
{
    if (a.diagram() != b.diagram())
        throw std::invalid_argument("braid words over different diagrams");
    if (!a.positive() || !b.positive())
        throw std::invalid_argument("brute_equal_positive requires positive words");
    if (a.size() != b.size())
        return false;
    if (static_cast<int>(a.size()) > length_cap)
        throw CapExceeded("brute_equal_positive length cap exceeded");

    const auto& d = a.diagram();
    std::vector<int> start, target;
    for (const auto& l : a.letters())
        start.push_back(l.node);
    for (const auto& l : b.letters())
        target.push_back(l.node);
    if (start == target)
        return true;

    std::unordered_set<std::vector<int>, VecHash> seen{start};
    std::deque<std::vector<int>> work{start};
    while (!work.empty()) {
        auto w = work.front();
        work.pop_front();
        auto visit = [&](std::vector<int>&& next) {
            if (next == target)
                return true;
            if (seen.insert(next).second)
                work.push_back(std::move(next));
            return false;
        };
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            int x = w[k], y = w[k + 1];
            if (x != y && !d.adjacent(x, y)) {
                auto next = w;
                std::swap(next[k], next[k + 1]);
                if (visit(std::move(next)))
                    return true;
            }
        }
        for (std::size_t k = 0; k + 2 < w.size(); ++k) {
            int x = w[k], y = w[k + 1];
            if (w[k + 2] == x && x != y && d.adjacent(x, y)) {
                auto next = w;
                next[k] = y;
                next[k + 1] = x;
                next[k + 2] = y;
                if (visit(std::move(next)))
                    return true;
            }
        }
    }
    return false;
}

CayleyReport cayley_check(const DynkinDiagram& d, std::uint64_t cap)
{
    if (weyl_order(d) > cap)
        throw CapExceeded("|W(" + d.name() + ")| exceeds oracle cap");
    int n = d.rank();
    std::vector<Mat> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back(mat_generator(d, i));

    std::unordered_map<std::vector<int>, int, VecHash> dist;
    std::deque<Mat> work;
    Mat id = mat_identity(n);
    dist[id] = 0;
    work.push_back(id);
    while (!work.empty()) {
        Mat m = work.front();
        work.pop_front();
        int dm = dist[m];
        for (const auto& g : gens) {
            Mat next = mat_mul(m, g, n);
            if (dist.emplace(next, dm + 1).second)
                work.push_back(next);
        }
    }

    CayleyReport rep;
    rep.element_count = dist.size();
    int max_len = -1;
    std::size_t max_count = 0;
    Mat max_elt;
    for (const auto& [m, dm] : dist) {
        int inv = mat_inversions(d, m);
        if (inv != dm) {
            std::ostringstream msg;
            msg << "inversion count " << inv << " != BFS distance " << dm;
            rep.detail = msg.str();
            return rep;
        }
        if (inv > max_len) {
            max_len = inv;
            max_count = 1;
            max_elt = m;
        } else if (inv == max_len) {
            ++max_count;
        }
    }
    if (max_count != 1) {
        rep.detail = "maximal-length element is not unique";
        return rep;
    }
    if (max_elt != longest_element(d).matrix()) {
        rep.detail = "maximal element differs from longest_element";
        return rep;
    }
    rep.ok = true;
    rep.detail = std::to_string(rep.element_count) + " elements, max length " +
                 std::to_string(max_len);
    return rep;
}

}  // namespace spherica::oracle
