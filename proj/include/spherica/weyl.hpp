#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spherica/dynkin.hpp"

namespace spherica {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
  Element of the Weyl group, stored as the exact integer matrix whose column j
  is w(alpha_{j+1}) in simple-root coordinates.  Matrix equality is group
  equality; length and descents are read off the root action, so no word
  rewriting is ever needed.
*/
class WeylElement {
  public:
    static WeylElement identity(const DynkinDiagram& d);
    static WeylElement generator(const DynkinDiagram& d, int node);

    const DynkinDiagram& diagram() const { return diagram_; }
    int rank() const { return diagram_.rank(); }
    const std::vector<int>& matrix() const { return m_; }

    bool is_identity() const;
    Root apply(const Root& r) const;
    Root image_of_simple(int node) const;

    WeylElement operator*(const WeylElement& rhs) const;
    WeylElement inverse() const;

    // Inversion count: #{positive roots beta : w(beta) < 0}.
    int length() const;
    // i is a right descent iff w(alpha_i) < 0; left descents are right descents of w^{-1}.
    std::vector<int> right_descents() const;
    std::vector<int> left_descents() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.diagram_ == b.diagram_ && a.m_ == b.m_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

  private:
    WeylElement(DynkinDiagram d, std::vector<int> m) : diagram_(std::move(d)), m_(std::move(m)) {}

    DynkinDiagram diagram_;
    std::vector<int> m_;  // row-major rank x rank
};

WeylElement longest_element(const DynkinDiagram& d);

// Deterministic reduced word: repeatedly strip the smallest right descent.
std::vector<int> reduced_word(const WeylElement& w);

bool is_reduced_factorization(const WeylElement& u, const WeylElement& v);

// w * s_node, valid only when node is a right descent of w.
WeylElement strip_right(const WeylElement& w, int node);

// |W| by the classical order formula, saturating at UINT64_MAX on overflow.
std::uint64_t weyl_order(const DynkinDiagram& d);

inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

// Breadth-first closure under right multiplication by generators.
std::vector<WeylElement> enumerate(const DynkinDiagram& d, std::uint64_t cap = kEnumerationCap);

// perm[i-1] = i* where w0 s_i w0 = s_{i*}.
std::vector<int> w0_automorphism(const DynkinDiagram& d);

}  // namespace spherica
