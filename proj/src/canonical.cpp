#include "azi/canonical.hpp"

#include "azi/graph6.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace azi {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: repeatedly split cells by the multiset of neighbor
// cell indices. Cell order (and hence the final labeling) depends only on
// the partition and the graph, never on vertex labels.
void refine(const Graph& g, Cells& cells) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    for (;;) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) color[v] = static_cast<int>(c);

        Cells next;
        bool split = false;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(g.degree(v));
                for (int w : g.neighbors(v)) sig.push_back(color[w]);
                std::sort(sig.begin(), sig.end());
                groups[sig].push_back(v);
            }
            if (groups.size() > 1) split = true;
            for (auto& [sig, verts] : groups) next.push_back(std::move(verts));
        }
        cells = std::move(next);
        if (!split) return;
    }
}

// (u v) swaps to an automorphism fixing everything else: same neighborhood
// apart from one another.
bool twins(const Graph& g, int u, int v) {
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::vector<int> a, b;
    for (int w : nu)
        if (w != v) a.push_back(w);
    for (int w : nv)
        if (w != u) b.push_back(w);
    return a == b;
}

struct CanonSearch {
    const Graph& g;
    std::string best; // graph6 of the best labeling found so far
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    void leaf(const Cells& cells) {
        std::vector<int> perm(g.vertex_count());
        for (std::size_t i = 0; i < cells.size(); ++i) perm[cells[i][0]] = static_cast<int>(i);
        std::string code = graph6_encode(g.relabeled(perm));
        if (!have_best || code < best) {
            best = std::move(code);
            have_best = true;
        }
    }

    void search(Cells cells) {
        refine(g, cells);
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        const std::vector<int> cell = cells[target];
        for (std::size_t i = 0; i < cell.size(); ++i) {
            bool skip = false;
            for (std::size_t j = 0; j < i && !skip; ++j)
                if (twins(g, cell[j], cell[i])) skip = true;
            if (skip) continue;

            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({cell[i]});
                std::vector<int> rest;
                for (int v : cell)
                    if (v != cell[i]) rest.push_back(v);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

} // namespace

CanonicalCode canonical_form(const Graph& g) {
    if (g.vertex_count() == 0) return graph6_encode(g);
    CanonSearch s(g);
    s.search({[&] {
        std::vector<int> all(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
        return all;
    }()});
    return s.best;
}

Graph canonical_graph(const Graph& g) {
    return graph6_decode(canonical_form(g));
}

} // namespace azi
