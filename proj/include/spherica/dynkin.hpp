#pragma once

#include <memory>
#include <string>
#include <vector>

namespace spherica {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

// Coordinates in the simple-root basis; entry k is the coefficient of alpha_{k+1}.
using Root = std::vector<int>;

/*
  Simply laced Dynkin diagram with Bourbaki node numbering (nodes are 1..rank):

    A_n (n >= 1):  1 - 2 - ... - n
    D_n (n >= 4):  1 - 2 - ... - (n-1), with node n attached to node n-2
                   (so D_4 is the star with center 2)
    E_n (n = 6,7,8):  1 - 3 - 4 - 5 - ... - n, with node 2 attached to node 4

  Immutable after construction; all accessors are safe for concurrent use.
  The positive root system is computed once, by closure from the simple roots.
*/
class DynkinDiagram {
  public:
    DynkinDiagram(Family family, int rank);

    Family family() const { return d_->family; }
    int rank() const { return d_->rank; }
    int edge_count() const { return d_->edges; }
    bool adjacent(int i, int j) const;
    const std::vector<int>& neighbors(int node) const;
    const std::vector<Root>& positive_roots() const { return d_->pos_roots; }
    std::string name() const;

    friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
        return a.d_->family == b.d_->family && a.d_->rank == b.d_->rank;
    }
    friend bool operator!=(const DynkinDiagram& a, const DynkinDiagram& b) { return !(a == b); }

  private:
    struct Data {
        Family family;
        int rank;
        int edges;
        std::vector<std::vector<int>> adj;  // adj[i-1] = sorted neighbor labels of node i
        std::vector<Root> pos_roots;
    };
    std::shared_ptr<const Data> d_;
};

bool is_positive_root(const Root& r);
bool is_negative_root(const Root& r);
Root simple_root(const DynkinDiagram& d, int node);

// Pairing <r, alpha_node^vee> = 2 r_node - sum of r over neighbors of node.
int cartan_pairing(const DynkinDiagram& d, int node, const Root& r);

// s_node(r) = r - cartan_pairing(d, node, r) * alpha_node.
Root reflect(const DynkinDiagram& d, int node, const Root& r);

const std::vector<Root>& positive_roots(const DynkinDiagram& d);

}  // namespace spherica
