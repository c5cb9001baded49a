#pragma once

#include <cstdint>
#include <string>

#include "spherica/garside.hpp"

namespace spherica::oracle {

inline constexpr int kBruteLengthCap = 10;

/*
  Positive-word equality decided by breadth-first search over single braid
  and commutation rewrites.  Independent of the normal-form machinery; words
  of unequal length are never equal.  Throws CapExceeded above the cap.
*/
bool brute_equal_positive(const BraidWord& a, const BraidWord& b, int length_cap = kBruteLengthCap);

struct CayleyReport {
    bool ok = false;
    std::size_t element_count = 0;
    std::string detail;
};

/*
  Builds the Cayley graph by raw generator-matrix products and checks, for
  every element, that inversion-count length equals BFS distance, and that the
  unique maximal element is longest_element(d).
*/
CayleyReport cayley_check(const DynkinDiagram& d, std::uint64_t cap = kEnumerationCap);

}  // namespace spherica::oracle
