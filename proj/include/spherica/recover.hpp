#pragma once

#include "spherica/twist.hpp"

namespace spherica {

struct RecoveryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TieBreak { Smallest, Random };

struct RecoveryStep {
    int max_degree;      // probe maximum before the strip
    int stripped_node;
};

struct RecoveryResult {
    GarsideNormalForm nf;
    std::vector<RecoveryStep> steps;
    std::vector<ProbeTable> tables;  // one table per probe, in order
};

/*
  Reconstructs the Garside normal form of a positive braid from the complex
  t_alpha(⊕S_i): the probe maximum p gives the factor count k = p - 2, nodes
  attaining p are left factors of the final factor, and stripping them by
  inverse twists walks the factorization down to the trivial action.
  Throws RecoveryError when the probe data is not consistent with any
  positive-braid action.
*/
RecoveryResult recover(const TwistedComplex& c, const DynkinDiagram& d,
                       TieBreak tb = TieBreak::Smallest, unsigned seed = 0);

// True iff the probe-table transcripts of the two positive words differ.
bool distinguish(const BraidWord& a, const BraidWord& b, int characteristic = 32003);

}  // namespace spherica
