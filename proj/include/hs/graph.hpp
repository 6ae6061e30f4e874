#ifndef HS_GRAPH_HPP
#define HS_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hs {

/// Simple undirected graph on vertices 0..n-1 with packed bit-row
/// adjacency. Immutable once built (builders return by value); all
/// queries are const.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int num_edges() const;

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// Popcount of N(u) & N(v).
    int common_neighbors(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_label(int v, std::string s);

    int words() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    std::uint64_t* mrow(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
};

/// Ordered partition of 0..n-1 into disjoint non-empty classes.
struct Partition {
    std::vector<std::vector<int>> classes;

    int num_classes() const { return static_cast<int>(classes.size()); }
    bool valid_for(int n) const;
    /// class index per vertex, -1 if not covered
    std::vector<int> class_of(int n) const;
};

struct VertexPairStats {
    bool adjacent = false;
    int common_neighbors = 0;      // lambda_{x,y} if adjacent, mu_{x,y} else
    long long walk3 = 0;           // (A^3)_{x,y}
};

// --- graph families ---

/// m x n rook's grid: vertices are cells (i,j), adjacent iff same row or column.
Graph build_grid(int m, int n);

/// Replace every vertex by a q-clique; copies of adjacent vertices fully joined.
/// Adjacency matrix: J_q (x) (A+I) - I.
Graph build_clique_extension(const Graph& g, int q);

/// Replace every vertex by a q-coclique; adjacency A (x) J_q.
Graph build_coclique_extension(const Graph& g, int q);

Graph cycle_graph(int n);          // n >= 3
Graph complete_graph(int n);
Graph cocktail_party(int n);       // CP(n): K_{2,...,2} with n parts
Graph disjoint_union(const std::vector<Graph>& gs);
Graph complement(const Graph& g);
Graph line_graph(const Graph& g);

// --- local queries ---

VertexPairStats pair_stats(const Graph& g, int x, int y);

/// (A^3)_{x,x} = twice the number of triangles through x.
long long diagonal_walk3(const Graph& g, int x);

/// Lexicographically smallest maximum clique; deterministic.
std::vector<int> max_clique(const Graph& g);

/// All cliques of exactly the maximum order, each sorted, list sorted.
std::vector<std::vector<int>> all_maximum_cliques(const Graph& g);

/// Closed-neighborhood equivalence classes ({x} u N(x) = {x'} u N(x')),
/// ordered by smallest member.
Partition twin_classes(const Graph& g);

/// Inverse of build_clique_extension for graphs whose twin classes all have
/// size q and induce cliques. Throws std::invalid_argument otherwise.
Graph quotient_by_twins(const Graph& g, int q);

bool is_isomorphic(const Graph& g, const Graph& h);
/// The mapping g -> h if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

// --- I/O ---

/// Edge-list text format: "n m", then m lines "u v" (0-based, u < v,
/// ascending), optionally "# labels" followed by n label lines.
void write_edge_list(const Graph& g, std::ostream& os);
Graph read_edge_list(std::istream& is);
std::string to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

std::string to_dot(const Graph& g);

} // namespace hs

#endif
