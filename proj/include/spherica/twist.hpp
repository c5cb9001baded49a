#pragma once

#include <optional>

#include "spherica/garside.hpp"
#include "spherica/zigzag.hpp"

namespace spherica {

// Cone of the evaluation RHom(S_node, C) (x) S_node -> C, before and after
// passing to the minimal model.
TwistedComplex twist_unreduced(int node, const TwistedComplex& c);
TwistedComplex twist(int node, const TwistedComplex& c);

// Inverse twist: cone of the coevaluation C -> RHom(C, S_node)^dual (x) S_node,
// shifted so that untwist(i, twist(i, C)) recovers C up to homotopy.
TwistedComplex untwist_unreduced(int node, const TwistedComplex& c);
TwistedComplex untwist(int node, const TwistedComplex& c);

// Letters act right to left: for alpha = sigma_i . beta, t_alpha = t_i o t_beta.
TwistedComplex twist_word(const BraidWord& word, const TwistedComplex& c);

/*
  Per-node table of dim [S_i, C]_d, the only view the recovery algorithm has
  of a braid action.
*/
struct ProbeTable {
    std::map<int, std::map<int, int>> rows;  // node -> degree -> dim (nonzero only)
    std::optional<int> max_degree;
    std::vector<int> top_nodes;              // nodes attaining max_degree, ascending

    std::string str() const;
    std::string machine_rows() const;  // "node degree dim" lines

    friend bool operator==(const ProbeTable& a, const ProbeTable& b) { return a.rows == b.rows; }
};

ProbeTable probe(const TwistedComplex& c);

}  // namespace spherica
