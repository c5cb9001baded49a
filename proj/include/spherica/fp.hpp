#pragma once

#include <vector>

namespace spherica {

bool is_prime(int p);

// Representative in [0, p).
int fp_normalize(long long v, int p);

int fp_inv(int a, int p);

struct FpMat {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;  // row-major

    FpMat() = default;
    FpMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    friend bool operator==(const FpMat&, const FpMat&) = default;
};

FpMat fp_mul(const FpMat& a, const FpMat& b, int p);

int fp_rank(FpMat m, int p);

// Is v in the column span of m?
bool fp_in_span(const FpMat& m, const std::vector<int>& v, int p);

}  // namespace spherica
