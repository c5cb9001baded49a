#include "spherica/fp.hpp"

#include <stdexcept>

namespace spherica {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (int q = 3; static_cast<long long>(q) * q <= p; q += 2)
        if (p % q == 0)
            return false;
    return true;
}

int fp_normalize(long long v, int p)
{
    long long r = v % p;
    if (r < 0)
        r += p;
    return static_cast<int>(r);
}

int fp_inv(int a, int p)
{
    a = fp_normalize(a, p);
    if (a == 0)
        throw std::invalid_argument("inverse of zero");
    // extended euclid
    int r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int q = r0 / r1;
        int r2 = r0 - q * r1;
        int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    return fp_normalize(t0, p);
}

FpMat fp_mul(const FpMat& a, const FpMat& b, int p)
{
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix dimension mismatch");
    FpMat m(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int x = a.at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < b.cols; ++j)
                m.at(i, j) = fp_normalize(m.at(i, j) + static_cast<long long>(x) * b.at(k, j), p);
        }
    return m;
}

int fp_rank(FpMat m, int p)
{
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int j = 0; j < m.cols; ++j)
            std::swap(m.at(pivot, j), m.at(rank, j));
        int inv = fp_inv(m.at(rank, col), p);
        for (int j = col; j < m.cols; ++j)
            m.at(rank, j) = fp_normalize(static_cast<long long>(m.at(rank, j)) * inv, p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank)
                continue;
            int f = fp_normalize(m.at(r, col), p);
            if (f == 0)
                continue;
            for (int j = col; j < m.cols; ++j)
                m.at(r, j) =
                    fp_normalize(m.at(r, j) - static_cast<long long>(f) * m.at(rank, j), p);
        }
        ++rank;
    }
    return rank;
}

bool fp_in_span(const FpMat& m, const std::vector<int>& v, int p)
{
    if (static_cast<int>(v.size()) != m.rows)
        throw std::invalid_argument("vector length mismatch");
    FpMat ext(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j)
            ext.at(i, j) = m.at(i, j);
        ext.at(i, m.cols) = fp_normalize(v[i], p);
    }
    return fp_rank(ext, p) == fp_rank(m, p);
}

}  // namespace spherica
