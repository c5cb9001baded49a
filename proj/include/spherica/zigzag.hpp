#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "spherica/dynkin.hpp"
#include "spherica/fp.hpp"

namespace spherica {

struct FieldError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/*
  Basis path of the zigzag algebra, determined by endpoints and degree:
  degree 0 is the idempotent e_i (source == target), degree 1 the arrow
  source -> target along an edge, degree 2 the loop X_i (source == target).
*/
struct Path {
    int source;
    int target;
    int degree;
    friend bool operator==(const Path&, const Path&) = default;
};

/*
  Zigzag algebra of a diagram over F_p.  Products follow function order:
  multiply(later, earlier) is "later after earlier", so the arrow i->j
  composed after the arrow j->i is the loop X_j ... more precisely
  multiply(a_{i<-j}, a_{j<-i}) = X_i.  Length-two paths through distinct
  endpoints vanish, as do all products of degree > 2.
*/
class ZigzagAlgebra {
  public:
    ZigzagAlgebra(DynkinDiagram d, int characteristic);

    const DynkinDiagram& diagram() const { return diagram_; }
    int characteristic() const { return p_; }
    int dimension() const { return 2 * diagram_.rank() + 2 * diagram_.edge_count(); }

    // Unique basis path with the given endpoints and degree, if any.
    std::optional<Path> path(int from, int to, int degree) const;
    std::optional<Path> multiply(const Path& later, const Path& earlier) const;

    std::string path_token(const Path& p) const;

  private:
    DynkinDiagram diagram_;
    int p_;
};

std::shared_ptr<const ZigzagAlgebra> make_zigzag_algebra(const DynkinDiagram& d,
                                                         int characteristic);

struct Generator {
    int node;
    int position;
    friend bool operator==(const Generator&, const Generator&) = default;
};

/*
  Formal complex of shifted projectives with an algebra-valued differential.
  An entry from generator g to generator h carries the unique basis path
  node(g) -> node(h) of degree 1 + pos(g) - pos(h), scaled by the stored
  coefficient.  Construction checks the degree rule and delta^2 = 0.
*/
class TwistedComplex {
  public:
    using Diff = std::map<std::pair<int, int>, int>;  // (from, to) -> coefficient

    TwistedComplex(std::shared_ptr<const ZigzagAlgebra> alg, std::vector<Generator> gens,
                   Diff diff);

    static TwistedComplex spherical(std::shared_ptr<const ZigzagAlgebra> alg, int node);
    static TwistedComplex spherical_sum(std::shared_ptr<const ZigzagAlgebra> alg);

    const std::shared_ptr<const ZigzagAlgebra>& algebra_ptr() const { return alg_; }
    const ZigzagAlgebra& algebra() const { return *alg_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const Diff& differential() const { return diff_; }
    std::size_t size() const { return gens_.size(); }

    Path entry_path(int from, int to) const;

    TwistedComplex shift(int k) const;
    TwistedComplex direct_sum(const TwistedComplex& other) const;

    std::vector<std::pair<int, int>> census() const;  // sorted (node, position) multiset
    std::string dump() const;

  private:
    std::shared_ptr<const ZigzagAlgebra> alg_;
    std::vector<Generator> gens_;
    Diff diff_;
};

// Homotopy-equivalent minimal model: strips invertible idempotent entries.
TwistedComplex gauss_eliminate(const TwistedComplex& c);

struct VectorComplex {
    int p = 2;
    std::map<int, int> dims;     // degree -> dimension (nonzero only)
    std::map<int, FpMat> diff;   // degree d -> matrix of size dims[d+1] x dims[d]
};

std::map<int, int> cohomology_dims(const VectorComplex& v);

struct HomBasisElt {
    int from;   // generator index in the source complex
    int to;     // generator index in the target complex
    Path path;
};

/*
  Hom complex between two twisted complexes.  A basis element is a path
  x: g -> h sitting in degree deg(x) - pos(g) + pos(h); the differential is
  f |-> delta_D o f - (-1)^{deg f} f o delta_C.
*/
struct HomComplex {
    std::shared_ptr<const ZigzagAlgebra> alg;
    VectorComplex vc;
    std::map<int, std::vector<HomBasisElt>> basis;                     // degree -> elements
    std::map<std::tuple<int, int, int>, std::pair<int, int>> index;    // (from,to,pathdeg) -> (degree, pos)

    int p() const { return vc.p; }
};

HomComplex hom_complex(const TwistedComplex& c, const TwistedComplex& d);

// cohomology_dims of the hom complex; the [C,D]_* table.
std::map<int, int> hom_dims(const TwistedComplex& c, const TwistedComplex& d);

bool is_cocycle(const HomComplex& h, int degree, const std::vector<int>& v);

// Composite class g o f for cocycles f in [X,Y]_a and g in [Y,Z]_b, expressed
// in the basis of hom_complex(X,Z) at degree a+b.
std::vector<int> compose(const HomComplex& hxy, int deg_f, const std::vector<int>& f,
                         const HomComplex& hyz, int deg_g, const std::vector<int>& g,
                         const HomComplex& hxz);

std::vector<int> identity_cocycle(const HomComplex& hxx);

// Equality of cohomology classes: a - b is a coboundary.
bool same_class(const HomComplex& h, int degree, const std::vector<int>& a,
                const std::vector<int>& b);

}  // namespace spherica
