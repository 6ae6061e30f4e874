#ifndef HS_HOFFMAN_HPP
#define HS_HOFFMAN_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hs/exact.hpp"
#include "hs/graph.hpp"

namespace hs {

/// Graph with a slim/fat vertex labeling: fat vertices are pairwise
/// non-adjacent and each has at least one slim neighbor. Validated on
/// construction.
class HoffmanGraph {
public:
    HoffmanGraph() = default;
    HoffmanGraph(Graph g, std::vector<bool> fat);

    const Graph& graph() const { return g_; }
    int order() const { return g_.order(); }
    bool is_fat(int v) const { return fat_[v]; }
    int slim_count() const { return static_cast<int>(slim_.size()); }
    int fat_count() const { return static_cast<int>(fats_.size()); }
    const std::vector<int>& slim_vertices() const { return slim_; }
    const std::vector<int>& fat_vertices() const { return fats_; }

    std::vector<int> slim_neighbors(int v) const;
    std::vector<int> fat_neighbors(int v) const;
    /// Common fat neighbors of two slim vertices (N^f(x,y)).
    std::vector<int> common_fat(int x, int y) const;
    /// Common slim neighbors of two fat vertices (N^s(F1,F2)).
    std::vector<int> common_slim(int f1, int f2) const;

private:
    Graph g_;
    std::vector<bool> fat_;
    std::vector<int> slim_, fats_;
};

struct Factor {
    std::vector<int> slim;   // slim vertices of the ambient graph, sorted
    std::vector<int> fat;    // fat vertices adjacent to them
    HoffmanGraph graph;      // induced Hoffman subgraph generated by `slim`
};

struct FactorDecomposition {
    std::vector<Factor> factors;
};

enum class FactorTag { G3, G4, G5, Other };

struct FactorType {
    FactorTag tag = FactorTag::Other;
    std::vector<int> quasi_clique_orders;  // sorted descending
    std::vector<int> vertex_types;         // per slim vertex of the factor, 0 = none
};

/// One fat vertex per membership set, adjacent to exactly that set of
/// slim vertices. Throws on empty sets.
HoffmanGraph make_hoffman(const Graph& slim_graph,
                          const std::vector<std::vector<int>>& fat_memberships);

/// Special matrix S(h) = A_s - C C^T on the slim vertices, input order.
IntMatrix special_matrix(const HoffmanGraph& h);

Graph slim_graph(const HoffmanGraph& h);

/// Subgraph of the slim graph induced by the slim neighborhood of fat
/// vertex f (the quasi-clique Q(f)).
Graph quasi_clique(const HoffmanGraph& h, int f);
int quasi_clique_order(const HoffmanGraph& h, int f);

/// Every slim vertex has at least t fat neighbors.
bool is_t_fat(const HoffmanGraph& h, int t);

/// Direct sum: slim parts stay disjoint, fat vertices identified pairwise by
/// `gluing` (index in h1, index in h2), and cross slim edges appear exactly
/// where a shared fat neighbor exists. Throws with a witness pair when a
/// cross pair would share two fat vertices.
HoffmanGraph direct_sum(const HoffmanGraph& h1, const HoffmanGraph& h2,
                        const std::vector<std::pair<int, int>>& gluing);

/// Finest partition of the slim set consistent with the direct-sum cross
/// condition: slim x,y are forced together iff (x~y and |N^f(x,y)| != 1) or
/// (x!~y and |N^f(x,y)| >= 1); factors are the transitive closure.
FactorDecomposition decompose(const HoffmanGraph& h);

/// Shape and per-vertex type classification for a factor. Orders are the
/// quasi-clique orders of the factor's fat vertices in the ambient Hoffman
/// graph (factor fat order); pass {} to use the factor's own orders.
FactorType classify_factor(const HoffmanGraph& factor, int t,
                           const std::vector<int>& ambient_orders = {});

// reference shapes (slim graph + fat memberships as in the prose)
HoffmanGraph g3_shape();  // slim edge x1~x2, fat sets {x1},{x1,x2},{x2}
HoffmanGraph g4_shape();  // slim edge x~y, fat sets {x,y},{x,y}
HoffmanGraph g5_shape();  // one slim vertex with three fat neighbors

// --- I/O ---

/// Edge-list format of the underlying graph plus a final line
/// "fat: i j k ...".
void write_hoffman(const HoffmanGraph& h, std::ostream& os);
HoffmanGraph read_hoffman(std::istream& is);
std::string to_hoffman_text(const HoffmanGraph& h);
HoffmanGraph hoffman_from_text(const std::string& text);

} // namespace hs

#endif
