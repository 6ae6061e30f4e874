#include "hs/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hs {

namespace {

int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

} // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    mrow(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    mrow(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

int Graph::num_edges() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int c = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) c += std::popcount(r[w]);
    return c;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

int Graph::common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return popcount_and(row(u), row(v), words_);
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
}

void Graph::set_label(int v, std::string s) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = std::move(s);
}

bool Partition::valid_for(int n) const {
    std::vector<char> seen(n, 0);
    for (const auto& cls : classes) {
        if (cls.empty()) return false;
        for (int v : cls) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<int> Partition::class_of(int n) const {
    std::vector<int> idx(n, -1);
    for (int i = 0; i < num_classes(); ++i)
        for (int v : classes[i]) idx[v] = i;
    return idx;
}

// --- families ---

Graph build_grid(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("build_grid: m, n >= 1 required");
    Graph g(m * n);
    auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            g.set_label(id(i, j), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
            for (int jj = j + 1; jj < n; ++jj) g.add_edge(id(i, j), id(i, jj));
            for (int ii = i + 1; ii < m; ++ii) g.add_edge(id(i, j), id(ii, j));
        }
    return g;
}

Graph build_clique_extension(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("build_clique_extension: q >= 1 required");
    const int n = g.order();
    Graph out(q * n);
    auto id = [q](int x, int a) { return x * q + a; };
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < q; ++a) {
            std::string base = g.has_labels() ? g.label(x) : std::to_string(x);
            out.set_label(id(x, a), base + "#" + std::to_string(a));
            for (int b = a + 1; b < q; ++b) out.add_edge(id(x, a), id(x, b));
        }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (g.adjacent(x, y))
                for (int a = 0; a < q; ++a)
                    for (int b = 0; b < q; ++b) out.add_edge(id(x, a), id(y, b));
    return out;
}

Graph build_coclique_extension(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("build_coclique_extension: q >= 1 required");
    const int n = g.order();
    Graph out(q * n);
    auto id = [q](int x, int a) { return x * q + a; };
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < q; ++a) {
            std::string base = g.has_labels() ? g.label(x) : std::to_string(x);
            out.set_label(id(x, a), base + "#" + std::to_string(a));
        }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (g.adjacent(x, y))
                for (int a = 0; a < q; ++a)
                    for (int b = 0; b < q; ++b) out.add_edge(id(x, a), id(y, b));
    return out;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cocktail_party(int n) {
    if (n < 1) throw std::invalid_argument("cocktail_party: n >= 1 required");
    Graph g(2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j)
            if (j != (i ^ 1)) g.add_edge(i, j);
    return g;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    int total = 0;
    for (const auto& g : gs) total += g.order();
    Graph out(total);
    int off = 0;
    for (const auto& g : gs) {
        for (int u = 0; u < g.order(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) out.add_edge(off + u, off + v);
        off += g.order();
    }
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        if (g.has_labels()) out.set_label(u, g.label(u));
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
    return out;
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    Graph out(static_cast<int>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out.set_label(static_cast<int>(i),
                      std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second));
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

// --- local queries ---

VertexPairStats pair_stats(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("pair_stats: x != y required (see diagonal_walk3)");
    VertexPairStats s;
    s.adjacent = g.adjacent(x, y);
    s.common_neighbors = g.common_neighbors(x, y);
    long long w3 = 0;
    for (int u : g.neighbors(x)) w3 += g.common_neighbors(u, y);
    s.walk3 = w3;
    return s;
}

long long diagonal_walk3(const Graph& g, int x) {
    long long w3 = 0;
    for (int u : g.neighbors(x)) w3 += g.common_neighbors(u, x);
    return w3;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
    const Graph& g;
    int n, words;
    std::vector<Bits> adj;
    std::vector<int> best;

    explicit CliqueSearch(const Graph& gr) : g(gr), n(gr.order()), words(gr.words()) {
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v].assign(g.row(v), g.row(v) + words);
    }

    static int popcnt(const Bits& b) {
        int c = 0;
        for (auto w : b) c += std::popcount(w);
        return c;
    }

    std::vector<int> members(const Bits& b) const {
        std::vector<int> out;
        for (int w = 0; w < words; ++w) {
            std::uint64_t x = b[w];
            while (x) {
                out.push_back(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

    // greedy coloring upper bound on clique size within cand
    int color_bound(const Bits& cand) const {
        Bits rest = cand;
        int colors = 0;
        while (popcnt(rest) > 0) {
            ++colors;
            Bits avail = rest;
            while (true) {
                int v = first_member(avail);
                if (v < 0) break;
                rest[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                avail[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                for (int w = 0; w < words; ++w) avail[w] &= ~adj[v][w];
            }
        }
        return colors;
    }

    int first_member(const Bits& b) const {
        for (int w = 0; w < words; ++w)
            if (b[w]) return w * 64 + std::countr_zero(b[w]);
        return -1;
    }

    void expand(std::vector<int>& cur, const Bits& cand) {
        int c = popcnt(cand);
        if (c == 0) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (cur.size() + c <= best.size()) return;
        if (cur.size() + color_bound(cand) <= best.size()) return;
        Bits rest = cand;
        for (int v : members(cand)) {
            if (cur.size() + popcnt(rest) <= best.size()) break;
            Bits next(words);
            rest[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            for (int w = 0; w < words; ++w) next[w] = rest[w] & adj[v][w];
            cur.push_back(v);
            expand(cur, next);
            cur.pop_back();
        }
    }

    int clique_number() {
        best.clear();
        Bits all(words, 0);
        for (int v = 0; v < n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
        std::vector<int> cur;
        expand(cur, all);
        return static_cast<int>(best.size());
    }

    // lexicographically smallest clique of exactly size k, ascending DFS
    bool lex_search(std::vector<int>& cur, const Bits& cand, int k, std::vector<int>& out) {
        if (static_cast<int>(cur.size()) == k) {
            out = cur;
            return true;
        }
        if (static_cast<int>(cur.size()) + popcnt(cand) < k) return false;
        Bits rest = cand;
        for (int v : members(cand)) {
            Bits next(words);
            rest[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            for (int w = 0; w < words; ++w) next[w] = rest[w] & adj[v][w];
            cur.push_back(v);
            if (lex_search(cur, next, k, out)) return true;
            cur.pop_back();
        }
        return false;
    }

    // Bron-Kerbosch with pivoting; collects maximal cliques of size exactly k
    void bk_pivot(std::vector<int>& cur, Bits P, Bits X, int k,
                  std::vector<std::vector<int>>& out) {
        if (popcnt(P) == 0 && popcnt(X) == 0) {
            if (static_cast<int>(cur.size()) == k) out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) + popcnt(P) < k) return;
        int pivot = -1, best_cover = -1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t x = P[w] | X[w];
            while (x) {
                int u = w * 64 + std::countr_zero(x);
                x &= x - 1;
                int cover = 0;
                for (int ww = 0; ww < words; ++ww) cover += std::popcount(P[ww] & adj[u][ww]);
                if (cover > best_cover) {
                    best_cover = cover;
                    pivot = u;
                }
            }
        }
        Bits ext(words);
        for (int w = 0; w < words; ++w) ext[w] = P[w] & ~adj[pivot][w];
        for (int v : members(ext)) {
            Bits nP(words), nX(words);
            for (int w = 0; w < words; ++w) {
                nP[w] = P[w] & adj[v][w];
                nX[w] = X[w] & adj[v][w];
            }
            cur.push_back(v);
            bk_pivot(cur, nP, nX, k, out);
            cur.pop_back();
            P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            X[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
    }
};

} // namespace

std::vector<int> max_clique(const Graph& g) {
    if (g.order() == 0) return {};
    CliqueSearch cs(g);
    int omega = cs.clique_number();
    Bits all(cs.words, 0);
    for (int v = 0; v < cs.n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> cur, out;
    cs.lex_search(cur, all, omega, out);
    return out;
}

std::vector<std::vector<int>> all_maximum_cliques(const Graph& g) {
    if (g.order() == 0) return {};
    CliqueSearch cs(g);
    int omega = cs.clique_number();
    Bits all(cs.words, 0);
    for (int v = 0; v < cs.n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> cur;
    std::vector<std::vector<int>> out;
    cs.bk_pivot(cur, all, Bits(cs.words, 0), omega, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

Partition twin_classes(const Graph& g) {
    const int n = g.order();
    const int words = g.words();
    std::map<Bits, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        Bits closed(g.row(v), g.row(v) + words);
        closed[v >> 6] |= std::uint64_t{1} << (v & 63);
        groups[closed].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [key, cls] : groups) classes.push_back(cls);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    Partition p;
    p.classes = std::move(classes);
    return p;
}

Graph quotient_by_twins(const Graph& g, int q) {
    Partition p = twin_classes(g);
    for (const auto& cls : p.classes) {
        if (static_cast<int>(cls.size()) != q)
            throw std::invalid_argument("quotient_by_twins: twin class of size " +
                                        std::to_string(cls.size()) + " != q");
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!g.adjacent(cls[i], cls[j]))
                    throw std::invalid_argument("quotient_by_twins: twin class not a clique");
    }
    const int m = p.num_classes();
    Graph out(m);
    for (int i = 0; i < m; ++i) {
        // label: representative label with any "#copy" suffix removed
        if (g.has_labels()) {
            std::string lbl = g.label(p.classes[i].front());
            auto pos = lbl.rfind('#');
            if (pos != std::string::npos) lbl = lbl.substr(0, pos);
            out.set_label(i, lbl);
        }
        for (int j = i + 1; j < m; ++j) {
            int cnt = 0;
            for (int u : p.classes[i])
                for (int v : p.classes[j]) cnt += g.adjacent(u, v) ? 1 : 0;
            if (cnt == static_cast<int>(p.classes[i].size() * p.classes[j].size()))
                out.add_edge(i, j);
            else if (cnt != 0)
                throw std::invalid_argument("quotient_by_twins: classes neither joined nor disjoint");
        }
    }
    return out;
}

namespace {

// iterated neighbor-color refinement (1-WL) run jointly on g and h so the
// resulting colors are comparable between the two graphs
void refine_colors(const Graph& g, const Graph& h, std::vector<int>& gc, std::vector<int>& hc) {
    const int n = g.order();
    gc.assign(n, 0);
    hc.assign(n, 0);
    int colors = 1;
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> dict;
        auto next_color = [&dict](int old, const Graph& gr, int v, const std::vector<int>& cols) {
            std::vector<int> sig;
            for (int u : gr.neighbors(v)) sig.push_back(cols[u]);
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(old, std::move(sig));
            auto it = dict.find(key);
            if (it == dict.end()) it = dict.emplace(std::move(key), static_cast<int>(dict.size())).first;
            return it->second;
        };
        std::vector<int> ng(n), nh(n);
        for (int v = 0; v < n; ++v) ng[v] = next_color(gc[v], g, v, gc);
        for (int v = 0; v < n; ++v) nh[v] = next_color(hc[v], h, v, hc);
        gc.swap(ng);
        hc.swap(nh);
        int nc = static_cast<int>(dict.size());
        if (nc == colors) break;
        colors = nc;
    }
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    int n, words;
    std::vector<int> mapping;       // g -> h, -1 unmapped
    std::vector<Bits> domains;      // candidate images per g-vertex

    IsoSearch(const Graph& gg, const Graph& hh)
        : g(gg), h(hh), n(gg.order()), words(hh.words()), mapping(gg.order(), -1) {}

    bool run() {
        std::vector<int> gc, hc;
        refine_colors(g, h, gc, hc);
        {
            auto a = gc;
            auto b = hc;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return false;
        }
        domains.assign(n, Bits(words, 0));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (gc[u] == hc[v] && g.degree(u) == h.degree(v))
                    domains[u][v >> 6] |= std::uint64_t{1} << (v & 63);
        return dfs(0);
    }

    static int popcnt(const Bits& b) {
        int c = 0;
        for (auto w : b) c += std::popcount(w);
        return c;
    }

    bool dfs(int depth) {
        if (depth == n) return true;
        int pick = -1, best = n + 1;
        for (int u = 0; u < n; ++u) {
            if (mapping[u] >= 0) continue;
            int d = popcnt(domains[u]);
            if (d == 0) return false;
            if (d < best) {
                best = d;
                pick = u;
            }
        }
        Bits cand = domains[pick];
        for (int w = 0; w < words; ++w) {
            std::uint64_t x = cand[w];
            while (x) {
                int v = w * 64 + std::countr_zero(x);
                x &= x - 1;
                auto saved = domains;
                mapping[pick] = v;
                bool ok = true;
                for (int u = 0; u < n && ok; ++u) {
                    if (u == pick) continue;
                    if (mapping[u] >= 0) continue;
                    if (g.adjacent(pick, u)) {
                        for (int ww = 0; ww < words; ++ww) domains[u][ww] &= h.row(v)[ww];
                    } else {
                        for (int ww = 0; ww < words; ++ww) domains[u][ww] &= ~h.row(v)[ww];
                    }
                    domains[u][v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                    if (popcnt(domains[u]) == 0) ok = false;
                }
                if (ok && dfs(depth + 1)) return true;
                mapping[pick] = -1;
                domains = std::move(saved);
            }
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.num_edges() != h.num_edges()) return std::nullopt;
    if (g.order() == 0) return std::vector<int>{};
    IsoSearch s(g, h);
    if (!s.run()) return std::nullopt;
    return s.mapping;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

// --- I/O ---

void write_edge_list(const Graph& g, std::ostream& os) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    os << g.order() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) os << u << " " << v << "\n";
    if (g.has_labels()) {
        os << "# labels\n";
        for (int v = 0; v < g.order(); ++v) os << g.label(v) << "\n";
    }
}

Graph read_edge_list(std::istream& is) {
    int n, m;
    if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated edge section");
        g.add_edge(u, v);
    }
    std::string line;
    std::getline(is, line);
    std::istream::pos_type mark = is.tellg();
    if (std::getline(is, line)) {
        if (line.rfind("# labels", 0) == 0) {
            for (int v = 0; v < n; ++v) {
                if (!std::getline(is, line)) throw std::invalid_argument("edge list: truncated labels");
                g.set_label(v, line);
            }
        } else {
            // not ours; rewind so a caller can parse trailing sections
            is.clear();
            is.seekg(mark);
        }
    } else {
        is.clear();
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(g, ss);
    return ss.str();
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return read_edge_list(ss);
}

std::string to_dot(const Graph& g) {
    std::ostringstream ss;
    ss << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        ss << "  " << v;
        if (g.has_labels() && !g.label(v).empty()) ss << " [label=\"" << g.label(v) << "\"]";
        ss << ";\n";
    }
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) ss << "  " << u << " -- " << v << ";\n";
    ss << "}\n";
    return ss.str();
}

} // namespace hs
