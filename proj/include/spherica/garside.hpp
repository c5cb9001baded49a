#pragma once

#include <string>
#include <vector>

#include "spherica/weyl.hpp"

namespace spherica {

struct WordParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BraidLetter {
    int node;
    int sign;  // +1 or -1
    friend bool operator==(const BraidLetter& a, const BraidLetter& b) = default;
};

/*
  Word in the braid generators.  Text form is whitespace-separated signed node
  indices: "1 2 -1" means sigma_1 sigma_2 sigma_1^{-1}.
*/
class BraidWord {
  public:
    explicit BraidWord(DynkinDiagram d, std::vector<BraidLetter> letters = {});
    static BraidWord parse(const DynkinDiagram& d, const std::string& text);

    const DynkinDiagram& diagram() const { return diagram_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    bool positive() const;
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    BraidWord operator*(const BraidWord& rhs) const;  // concatenation
    BraidWord inverse() const;
    std::string str() const;

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.diagram_ == b.diagram_ && a.letters_ == b.letters_;
    }

  private:
    DynkinDiagram diagram_;
    std::vector<BraidLetter> letters_;
};

/*
  Right-greedy normal form: the braid is lift(w_k) ... lift(w_1) * Delta^m,
  factors stored leftmost (w_k) first, every factor != 1 and != w0, and every
  adjacent pair locally normal (right descents of the left factor contained in
  the left descents of the right factor).
*/
struct GarsideNormalForm {
    DynkinDiagram diagram;
    int delta_power = 0;
    std::vector<WeylElement> factors;

    BraidWord to_word() const;
    std::string str() const;

    friend bool operator==(const GarsideNormalForm& a, const GarsideNormalForm& b) {
        return a.diagram == b.diagram && a.delta_power == b.delta_power && a.factors == b.factors;
    }
};

// Section of the projection: positive word spelling a fixed reduced word of w.
BraidWord lift(const WeylElement& w);

// Projection B -> W; signs are ignored since s_i is an involution.
WeylElement project(const BraidWord& word);

// Local Garside condition for the pair u.v: right descents of u within left descents of v.
bool is_normal_pair(const WeylElement& u, const WeylElement& v);

// s_node can start some reduced word of w.
bool left_factor_generator(const WeylElement& w, int node);

// Garside factorization of a positive word; factors may include w0, no Delta absorption.
std::vector<WeylElement> normalize_positive(const BraidWord& word);

GarsideNormalForm normalize(const BraidWord& word);

bool equals(const BraidWord& a, const BraidWord& b);

BraidWord delta(const DynkinDiagram& d);

// Conjugation by Delta: relabels letters by the diagram automorphism induced by w0.
BraidWord tau(const BraidWord& word);

}  // namespace spherica
