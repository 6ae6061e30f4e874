#include "hs/hoffman.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hs {

HoffmanGraph::HoffmanGraph(Graph g, std::vector<bool> fat)
    : g_(std::move(g)), fat_(std::move(fat)) {
    if (static_cast<int>(fat_.size()) != g_.order())
        throw std::invalid_argument("fat flag vector size mismatch");
    for (int v = 0; v < g_.order(); ++v)
        (fat_[v] ? fats_ : slim_).push_back(v);
    for (int f : fats_) {
        bool has_slim = false;
        for (int u : g_.neighbors(f)) {
            if (fat_[u])
                throw std::invalid_argument("fat vertices must be pairwise non-adjacent");
            has_slim = true;
        }
        if (!has_slim)
            throw std::invalid_argument("fat vertex without a slim neighbor");
    }
}

std::vector<int> HoffmanGraph::slim_neighbors(int v) const {
    std::vector<int> out;
    for (int u : g_.neighbors(v))
        if (!fat_[u]) out.push_back(u);
    return out;
}

std::vector<int> HoffmanGraph::fat_neighbors(int v) const {
    std::vector<int> out;
    for (int u : g_.neighbors(v))
        if (fat_[u]) out.push_back(u);
    return out;
}

std::vector<int> HoffmanGraph::common_fat(int x, int y) const {
    std::vector<int> out;
    for (int f : fats_)
        if (g_.adjacent(f, x) && g_.adjacent(f, y)) out.push_back(f);
    return out;
}

std::vector<int> HoffmanGraph::common_slim(int f1, int f2) const {
    std::vector<int> out;
    for (int s : slim_)
        if (g_.adjacent(s, f1) && g_.adjacent(s, f2)) out.push_back(s);
    return out;
}

HoffmanGraph make_hoffman(const Graph& slim_graph,
                          const std::vector<std::vector<int>>& fat_memberships) {
    const int ns = slim_graph.order();
    const int nf = static_cast<int>(fat_memberships.size());
    Graph g(ns + nf);
    for (int u = 0; u < ns; ++u)
        for (int v = u + 1; v < ns; ++v)
            if (slim_graph.adjacent(u, v)) g.add_edge(u, v);
    for (int i = 0; i < nf; ++i) {
        if (fat_memberships[i].empty())
            throw std::invalid_argument("fat vertex with empty membership set");
        for (int s : fat_memberships[i]) {
            if (s < 0 || s >= ns)
                throw std::invalid_argument("fat membership references missing slim vertex");
            g.add_edge(s, ns + i);
        }
    }
    std::vector<bool> fat(ns + nf, false);
    for (int i = 0; i < nf; ++i) fat[ns + i] = true;
    return HoffmanGraph(std::move(g), std::move(fat));
}

IntMatrix special_matrix(const HoffmanGraph& h) {
    const auto& slim = h.slim_vertices();
    const int n = static_cast<int>(slim.size());
    IntMatrix s = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int v = 0;
            if (i != j && h.graph().adjacent(slim[i], slim[j])) v = 1;
            v -= static_cast<int>(h.common_fat(slim[i], slim[j]).size());
            s(i, j) = v;
        }
    return s;
}

Graph slim_graph(const HoffmanGraph& h) {
    const auto& slim = h.slim_vertices();
    const int n = static_cast<int>(slim.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (h.graph().adjacent(slim[i], slim[j])) g.add_edge(i, j);
    if (h.graph().has_labels())
        for (int i = 0; i < n; ++i) g.set_label(i, h.graph().label(slim[i]));
    return g;
}

Graph quasi_clique(const HoffmanGraph& h, int f) {
    if (!h.is_fat(f)) throw std::invalid_argument("quasi_clique: not a fat vertex");
    std::vector<int> verts = h.slim_neighbors(f);
    const int n = static_cast<int>(verts.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (h.graph().adjacent(verts[i], verts[j])) g.add_edge(i, j);
    return g;
}

int quasi_clique_order(const HoffmanGraph& h, int f) {
    if (!h.is_fat(f)) throw std::invalid_argument("quasi_clique_order: not a fat vertex");
    return h.graph().degree(f);
}

bool is_t_fat(const HoffmanGraph& h, int t) {
    for (int s : h.slim_vertices())
        if (static_cast<int>(h.fat_neighbors(s).size()) < t) return false;
    return true;
}

HoffmanGraph direct_sum(const HoffmanGraph& h1, const HoffmanGraph& h2,
                        const std::vector<std::pair<int, int>>& gluing) {
    // Identified fat pairs; unmatched fat vertices of either part stay
    // separate. Slim sets are disjoint.
    std::vector<int> glue1(h1.order(), -1), glue2(h2.order(), -1);
    for (auto [f1, f2] : gluing) {
        if (!h1.is_fat(f1) || !h2.is_fat(f2))
            throw std::invalid_argument("direct_sum: gluing pair must be fat in both parts");
        if (glue1[f1] != -1 || glue2[f2] != -1)
            throw std::invalid_argument("direct_sum: fat vertex glued twice");
        glue1[f1] = f2;
        glue2[f2] = f1;
    }
    // condition check: a cross slim pair may share at most one fat vertex
    for (int x : h1.slim_vertices())
        for (int y : h2.slim_vertices()) {
            int shared = 0;
            for (auto [f1, f2] : gluing)
                if (h1.graph().adjacent(x, f1) && h2.graph().adjacent(y, f2)) ++shared;
            if (shared > 1) {
                std::ostringstream msg;
                msg << "direct_sum: slim pair (" << x << ", " << y
                    << ") would share " << shared << " fat vertices";
                throw std::invalid_argument(msg.str());
            }
        }

    // layout: slim(h1), slim(h2), fat(h1), unmatched fat(h2)
    const auto& s1 = h1.slim_vertices();
    const auto& s2 = h2.slim_vertices();
    const auto& f1s = h1.fat_vertices();
    const auto& f2s = h2.fat_vertices();

    std::vector<int> map1(h1.order(), -1), map2(h2.order(), -1);
    int idx = 0;
    for (int v : s1) map1[v] = idx++;
    for (int v : s2) map2[v] = idx++;
    for (int v : f1s) map1[v] = idx++;
    for (int v : f2s)
        if (glue2[v] == -1) map2[v] = idx++;
    for (int v : f2s)
        if (glue2[v] != -1) map2[v] = map1[glue2[v]];

    Graph g(idx);
    std::vector<bool> fat(idx, false);
    for (int v : f1s) fat[map1[v]] = true;
    for (int v : f2s) fat[map2[v]] = true;

    auto copy_edges = [&](const HoffmanGraph& h, const std::vector<int>& map) {
        for (int u = 0; u < h.order(); ++u)
            for (int v = u + 1; v < h.order(); ++v)
                if (h.graph().adjacent(u, v)) g.add_edge(map[u], map[v]);
    };
    copy_edges(h1, map1);
    copy_edges(h2, map2);

    // cross slim edges: exactly where a (single) glued fat vertex is shared
    for (int x : s1)
        for (int y : s2)
            for (auto [fa, fb] : gluing)
                if (h1.graph().adjacent(x, fa) && h2.graph().adjacent(y, fb))
                    g.add_edge(map1[x], map2[y]);

    return HoffmanGraph(std::move(g), std::move(fat));
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

HoffmanGraph induced_factor(const HoffmanGraph& h, const std::vector<int>& slim,
                            std::vector<int>* fat_out) {
    std::vector<int> fat;
    for (int f : h.fat_vertices())
        for (int s : slim)
            if (h.graph().adjacent(f, s)) {
                fat.push_back(f);
                break;
            }
    if (fat_out) *fat_out = fat;

    std::vector<int> verts = slim;
    verts.insert(verts.end(), fat.begin(), fat.end());
    std::vector<int> inv(h.order(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) inv[verts[i]] = i;

    Graph g(static_cast<int>(verts.size()));
    std::vector<bool> is_fat(verts.size(), false);
    for (int f : fat) is_fat[inv[f]] = true;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
            if (h.graph().adjacent(verts[i], verts[j])) g.add_edge(i, j);
    return HoffmanGraph(std::move(g), std::move(is_fat));
}

} // namespace

FactorDecomposition decompose(const HoffmanGraph& h) {
    const auto& slim = h.slim_vertices();
    const int n = static_cast<int>(slim.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int x = slim[i], y = slim[j];
            int nf = static_cast<int>(h.common_fat(x, y).size());
            bool adj = h.graph().adjacent(x, y);
            // x,y must land in the same factor iff separating them would
            // violate the direct-sum cross condition
            if ((adj && nf != 1) || (!adj && nf >= 1)) uf.unite(i, j);
        }
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < n; ++i) comps[uf.find(i)].push_back(slim[i]);

    FactorDecomposition d;
    for (auto& [root, verts] : comps) {
        Factor f;
        f.slim = verts;
        f.graph = induced_factor(h, verts, &f.fat);
        d.factors.push_back(std::move(f));
    }
    std::sort(d.factors.begin(), d.factors.end(),
              [](const Factor& a, const Factor& b) { return a.slim < b.slim; });
    return d;
}

FactorType classify_factor(const HoffmanGraph& factor, int t,
                           const std::vector<int>& ambient_orders) {
    FactorType ft;
    std::vector<int> orders = ambient_orders;
    if (orders.empty())
        for (int f : factor.fat_vertices())
            orders.push_back(quasi_clique_order(factor, f));
    if (orders.size() != factor.fat_vertices().size())
        throw std::invalid_argument("classify_factor: order list size mismatch");
    ft.quasi_clique_orders = orders;
    std::sort(ft.quasi_clique_orders.rbegin(), ft.quasi_clique_orders.rend());

    const int ns = factor.slim_count();
    const int nf = factor.fat_count();

    // shape
    if (ns == 1 && nf == 3) {
        ft.tag = FactorTag::G5;
    } else if (ns == 2 && nf == 2 &&
               factor.graph().adjacent(factor.slim_vertices()[0],
                                       factor.slim_vertices()[1])) {
        // both fat vertices adjacent to both slim vertices -> g4
        bool all_both = true;
        for (int f : factor.fat_vertices())
            if (factor.graph().degree(f) != 2) all_both = false;
        ft.tag = all_both ? FactorTag::G4 : FactorTag::Other;
    } else if (ns == 2 && nf == 3 &&
               factor.graph().adjacent(factor.slim_vertices()[0],
                                       factor.slim_vertices()[1])) {
        // degrees (1, 2, 1) on the fat side, one shared fat vertex -> g3
        std::vector<int> degs;
        for (int f : factor.fat_vertices()) degs.push_back(factor.graph().degree(f));
        std::sort(degs.begin(), degs.end());
        ft.tag = (degs == std::vector<int>{1, 1, 2}) ? FactorTag::G3 : FactorTag::Other;
    }

    // per-vertex type from the multiset of ambient quasi-clique orders of the
    // fat neighbors of each slim vertex
    std::vector<int> order_of(factor.order(), -1);
    {
        int i = 0;
        for (int f : factor.fat_vertices()) order_of[f] = orders[i++];
    }
    for (int s : factor.slim_vertices()) {
        std::vector<int> sig;
        for (int f : factor.fat_neighbors(s)) sig.push_back(order_of[f]);
        std::sort(sig.rbegin(), sig.rend());
        int type = 0;
        if (sig == std::vector<int>{2 * t + 2, 2 * t + 2})
            type = ft.tag == FactorTag::G4 ? 2 : 1;
        else if (sig == std::vector<int>{2 * t + 2, 2 * t + 1, 1})
            type = 3;
        else if (sig == std::vector<int>{2 * t + 2, 2 * t, 2})
            type = 4;
        else if (sig == std::vector<int>{2 * t + 1, 2 * t + 1, 2})
            type = 5;
        ft.vertex_types.push_back(type);
    }
    return ft;
}

HoffmanGraph g3_shape() {
    Graph s(2);
    s.add_edge(0, 1);
    return make_hoffman(s, {{0}, {0, 1}, {1}});
}

HoffmanGraph g4_shape() {
    Graph s(2);
    s.add_edge(0, 1);
    return make_hoffman(s, {{0, 1}, {0, 1}});
}

HoffmanGraph g5_shape() {
    Graph s(1);
    return make_hoffman(s, {{0}, {0}, {0}});
}

void write_hoffman(const HoffmanGraph& h, std::ostream& os) {
    write_edge_list(h.graph(), os);
    os << "fat:";
    for (int f : h.fat_vertices()) os << ' ' << f;
    os << '\n';
}

HoffmanGraph read_hoffman(std::istream& is) {
    Graph g = read_edge_list(is);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("fat:", 0) != 0) continue;
        std::istringstream ls(line.substr(4));
        std::vector<bool> fat(g.order(), false);
        int v;
        while (ls >> v) {
            if (v < 0 || v >= g.order())
                throw std::invalid_argument("fat vertex out of range");
            fat[v] = true;
        }
        return HoffmanGraph(std::move(g), std::move(fat));
    }
    throw std::invalid_argument("missing fat: line");
}

std::string to_hoffman_text(const HoffmanGraph& h) {
    std::ostringstream os;
    write_hoffman(h, os);
    return os.str();
}

HoffmanGraph hoffman_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_hoffman(is);
}

} // namespace hs
