#include "spherica/weyl.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

namespace spherica {

namespace {

void require_same_diagram(const WeylElement& a, const WeylElement& b)
{
    if (a.diagram() != b.diagram())
        throw std::invalid_argument("Weyl elements over different diagrams");
}

struct MatrixHash {
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

}  // namespace

WeylElement WeylElement::identity(const DynkinDiagram& d)
{
    int n = d.rank();
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i)
        m[i * n + i] = 1;
    return {d, std::move(m)};
}

WeylElement WeylElement::generator(const DynkinDiagram& d, int node)
{
    if (node < 1 || node > d.rank())
        throw std::invalid_argument("unknown node: " + std::to_string(node));
    int n = d.rank();
    auto w = identity(d);
    // Row node-1 of s_node is e_node - (Cartan row), i.e. column j picks up
    // -<alpha_j, alpha_node^vee> in coordinate node-1.
    w.m_[(node - 1) * n + (node - 1)] = -1;
    for (int nb : d.neighbors(node))
        w.m_[(node - 1) * n + (nb - 1)] = 1;
    return w;
}

bool WeylElement::is_identity() const
{
    int n = rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m_[i * n + j] != (i == j ? 1 : 0))
                return false;
    return true;
}

Root WeylElement::apply(const Root& r) const
{
    int n = rank();
    if (static_cast<int>(r.size()) != n)
        throw std::invalid_argument("root has wrong rank");
    Root out(n, 0);
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = 0; j < n; ++j)
            acc += m_[i * n + j] * r[j];
        out[i] = acc;
    }
    return out;
}

Root WeylElement::image_of_simple(int node) const
{
    int n = rank();
    if (node < 1 || node > n)
        throw std::invalid_argument("node out of range");
    Root out(n, 0);
    for (int i = 0; i < n; ++i)
        out[i] = m_[i * n + (node - 1)];
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const
{
    require_same_diagram(*this, rhs);
    int n = rank();
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int a = m_[i * n + k];
            if (a == 0)
                continue;
            for (int j = 0; j < n; ++j)
                m[i * n + j] += a * rhs.m_[k * n + j];
        }
    return {diagram_, std::move(m)};
}

WeylElement WeylElement::inverse() const
{
    auto word = reduced_word(*this);
    auto r = identity(diagram_);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = r * generator(diagram_, *it);
    return r;
}

int WeylElement::length() const
{
    int count = 0;
    for (const Root& beta : diagram_.positive_roots())
        if (is_negative_root(apply(beta)))
            ++count;
    return count;
}

std::vector<int> WeylElement::right_descents() const
{
    int n = rank();
    std::vector<int> out;
    for (int j = 0; j < n; ++j) {
        bool neg = true;
        for (int i = 0; i < n; ++i)
            if (m_[i * n + j] > 0) {
                neg = false;
                break;
            }
        if (neg)
            out.push_back(j + 1);
    }
    return out;
}

std::vector<int> WeylElement::left_descents() const
{
    return inverse().right_descents();
}

WeylElement longest_element(const DynkinDiagram& d)
{
    auto w = WeylElement::identity(d);
    int n = d.rank();
    while (true) {
        auto rd = w.right_descents();
        if (static_cast<int>(rd.size()) == n)
            return w;
        int ascent = 0;
        for (int i = 1; i <= n; ++i)
            if (!std::binary_search(rd.begin(), rd.end(), i)) {
                ascent = i;
                break;
            }
        w = w * WeylElement::generator(d, ascent);
    }
}

std::vector<int> reduced_word(const WeylElement& w)
{
    std::vector<int> out;
    auto cur = w;
    while (!cur.is_identity()) {
        auto rd = cur.right_descents();
        int i = rd.front();
        out.push_back(i);
        cur = cur * WeylElement::generator(cur.diagram(), i);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

bool is_reduced_factorization(const WeylElement& u, const WeylElement& v)
{
    require_same_diagram(u, v);
    return (u * v).length() == u.length() + v.length();
}

WeylElement strip_right(const WeylElement& w, int node)
{
    auto rd = w.right_descents();
    if (!std::binary_search(rd.begin(), rd.end(), node))
        throw std::invalid_argument("node " + std::to_string(node) + " is not a right descent");
    return w * WeylElement::generator(w.diagram(), node);
}

std::uint64_t weyl_order(const DynkinDiagram& d)
{
    const std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
    auto mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (a == 0 || b == 0)
            return 0;
        if (a > inf / b)
            return inf;
        return a * b;
    };
    int n = d.rank();
    std::uint64_t r = 1;
    switch (d.family()) {
        case Family::A:
            for (int k = 2; k <= n + 1; ++k)
                r = mul(r, static_cast<std::uint64_t>(k));
            return r;
        case Family::D:
            for (int k = 2; k <= n; ++k)
                r = mul(r, static_cast<std::uint64_t>(k));
            for (int k = 0; k < n - 1; ++k)
                r = mul(r, 2);
            return r;
        case Family::E:
            if (n == 6)
                return 51840;
            if (n == 7)
                return 2903040;
            return 696729600;
    }
    return inf;
}

std::vector<WeylElement> enumerate(const DynkinDiagram& d, std::uint64_t cap)
{
    if (weyl_order(d) > cap)
        throw CapExceeded("|W(" + d.name() + ")| exceeds enumeration cap");
    std::vector<WeylElement> out;
    std::unordered_map<std::vector<int>, int, MatrixHash> seen;
    std::deque<int> work;
    auto push = [&](const WeylElement& w) {
        auto [it, fresh] = seen.emplace(w.matrix(), static_cast<int>(out.size()));
        if (fresh) {
            out.push_back(w);
            work.push_back(it->second);
        }
    };
    push(WeylElement::identity(d));
    std::vector<WeylElement> gens;
    for (int i = 1; i <= d.rank(); ++i)
        gens.push_back(WeylElement::generator(d, i));
    while (!work.empty()) {
        int idx = work.front();
        work.pop_front();
        for (const auto& g : gens)
            push(out[idx] * g);
    }
    return out;
}

std::vector<int> w0_automorphism(const DynkinDiagram& d)
{
    auto w0 = longest_element(d);
    int n = d.rank();
    std::vector<int> perm(n, 0);
    for (int i = 1; i <= n; ++i) {
        // w0(alpha_i) = -alpha_{i*}
        Root img = w0.image_of_simple(i);
        int star = 0;
        for (int j = 0; j < n; ++j) {
            if (img[j] == -1 && star == 0)
                star = j + 1;
            else if (img[j] != 0)
                throw std::logic_error("w0 image of a simple root is not minus a simple root");
        }
        auto conj = w0 * WeylElement::generator(d, i) * w0;
        if (conj != WeylElement::generator(d, star))
            throw std::logic_error("w0 conjugation mismatch");
        perm[i - 1] = star;
    }
    return perm;
}

}  // namespace spherica
