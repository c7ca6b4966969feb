#ifndef AZI_GRAPH_HPP
#define AZI_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace azi {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// all "mutating" helpers return a new graph.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph single_vertex() { return Graph(1); }
    static Graph empty(int n) { return Graph(n); }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    std::vector<int> degree_sequence() const; // sorted ascending

    Graph with_edge_added(int u, int v) const;
    Graph with_edge_removed(int u, int v) const;
    // Removes the listed vertices and relabels the rest downward, preserving
    // relative order of the survivors.
    Graph with_vertices_removed(std::span<const int> victims) const;
    Graph relabeled(std::span<const int> perm) const; // new_label = perm[old_label]

    bool operator==(const Graph& other) const = default;

private:
    explicit Graph(int n) : n_(n), adj_(n) {}

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists

    friend class GraphBuilder;
};

// Incremental construction used by the generators; finish() sorts the
// adjacency lists and freezes the result.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    void add_edge(int u, int v);
    Graph finish();

private:
    Graph g_;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g); // connected and m == n-1

// Number of independent cycles m - n + 1 of a connected graph; for a cactus
// this is exactly the number of cycles. Throws Error{NotConnected}.
int cycle_count(const Graph& g);

struct Block {
    std::vector<int> vertices;               // sorted
    std::vector<std::pair<int, int>> edges;  // u < v, lexicographic
    bool is_cycle() const { return edges.size() >= 3 && edges.size() == vertices.size(); }
    bool is_bridge() const { return edges.size() == 1; }
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices; // sorted
};

// Maximal 2-connected blocks and bridges (edge partition), Hopcroft-Tarjan.
// Works on disconnected graphs; isolated vertices yield no block.
BlockDecomposition block_decomposition(const Graph& g);

// Connected and every block is an edge or a cycle.
bool is_cactus(const Graph& g);

} // namespace azi

#endif
