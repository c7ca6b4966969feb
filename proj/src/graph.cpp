#include "azi/graph.hpp"

#include "azi/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace azi {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw Error(ErrorKind::InvalidEdge, "negative vertex count");
    Graph g(n);
    std::vector<std::set<int>> nbr(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::InvalidEdge,
                        "vertex out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw Error(ErrorKind::InvalidEdge, "self-loop at " + std::to_string(u));
        nbr[u].insert(v); // duplicate pairs collapse
        nbr[v].insert(u);
    }
    int m = 0;
    for (int v = 0; v < n; ++v) {
        g.adj_[v].assign(nbr[v].begin(), nbr[v].end());
        m += static_cast<int>(g.adj_[v].size());
    }
    g.m_ = m / 2;
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph Graph::with_edge_added(int u, int v) const {
    Graph g = *this;
    if (u == v) throw Error(ErrorKind::InvalidEdge, "self-loop");
    if (has_edge(u, v)) return g;
    g.adj_[u].insert(std::lower_bound(g.adj_[u].begin(), g.adj_[u].end(), v), v);
    g.adj_[v].insert(std::lower_bound(g.adj_[v].begin(), g.adj_[v].end(), u), u);
    ++g.m_;
    return g;
}

Graph Graph::with_edge_removed(int u, int v) const {
    Graph g = *this;
    if (!has_edge(u, v)) throw Error(ErrorKind::InvalidEdge, "no such edge");
    g.adj_[u].erase(std::lower_bound(g.adj_[u].begin(), g.adj_[u].end(), v));
    g.adj_[v].erase(std::lower_bound(g.adj_[v].begin(), g.adj_[v].end(), u));
    --g.m_;
    return g;
}

Graph Graph::with_vertices_removed(std::span<const int> victims) const {
    std::vector<bool> gone(n_, false);
    for (int v : victims) gone[v] = true;
    std::vector<int> new_label(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (!gone[v]) new_label[v] = next++;

    Graph g(next);
    int m = 0;
    for (int v = 0; v < n_; ++v) {
        if (gone[v]) continue;
        for (int w : adj_[v]) {
            if (gone[w]) continue;
            g.adj_[new_label[v]].push_back(new_label[w]);
            ++m;
        }
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.m_ = m / 2;
    return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v)
        for (int w : adj_[v]) g.adj_[perm[v]].push_back(perm[w]);
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.m_ = m_;
    return g;
}

void GraphBuilder::add_edge(int u, int v) {
    g_.adj_[u].push_back(v);
    g_.adj_[v].push_back(u);
    ++g_.m_;
}

Graph GraphBuilder::finish() {
    for (auto& a : g_.adj_) std::sort(a.begin(), a.end());
    return std::move(g_);
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

int cycle_count(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "cycle_count needs a connected graph");
    return g.edge_count() - g.vertex_count() + 1;
}

namespace {

// Iterative Hopcroft-Tarjan; emits each biconnected component (or bridge)
// as an edge set popped off the edge stack.
struct BlockFinder {
    const Graph& g;
    int n;
    std::vector<int> disc, low, parent, child_iter;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<Block> blocks;
    std::vector<bool> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          n(graph.vertex_count()),
          disc(n, -1),
          low(n, 0),
          parent(n, -1),
          child_iter(n, 0),
          is_cut(n, false) {}

    void pop_block(int u, int v) {
        Block b;
        std::set<int> verts;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            b.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            if (e == std::make_pair(u, v)) break;
        }
        b.vertices.assign(verts.begin(), verts.end());
        std::sort(b.edges.begin(), b.edges.end());
        blocks.push_back(std::move(b));
    }

    void run_from(int root) {
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            int v = stack.back();
            if (child_iter[v] < static_cast<int>(g.neighbors(v).size())) {
                int w = g.neighbors(v)[child_iter[v]++];
                if (disc[w] == -1) {
                    edge_stack.emplace_back(v, w);
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != root) is_cut[p] = true;
                        pop_block(p, v);
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = true;
    }
};

} // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.disc[v] == -1 && g.degree(v) > 0) finder.run_from(v);

    BlockDecomposition out;
    out.blocks = std::move(finder.blocks);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (finder.is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

bool is_cactus(const Graph& g) {
    if (!is_connected(g)) return false;
    for (const Block& b : block_decomposition(g).blocks)
        if (!b.is_bridge() && !b.is_cycle()) return false;
    return true;
}

} // namespace azi
