#include "azi/transform.hpp"

#include "azi/canonical.hpp"
#include "azi/errors.hpp"
#include "azi/graph6.hpp"
#include "azi/indices.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace azi {

namespace {

void require_vertex(const Graph& g, int v, const char* op) {
    if (v < 0 || v >= g.vertex_count()) {
        std::ostringstream msg;
        msg << op << ": vertex " << v << " out of range";
        throw Error(ErrorKind::PatternMismatch, msg.str());
    }
}

bool has_degenerate_edge(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) == 1 && g.degree(v) == 1) return true;
    return false;
}

// azi(g) - azi(h) over the touched edges only: removed edges at old degrees,
// added edges at new degrees, surviving edges with a degree-changed endpoint.
// vmap maps g's labels to h's (-1 = removed). Empty when either side has a
// (1,1) edge and its AZI is undefined.
std::optional<Rational> incremental_delta(const Graph& g, const Graph& h,
                                          const std::vector<int>& vmap) {
    if (has_degenerate_edge(g) || has_degenerate_edge(h)) return std::nullopt;
    Rational delta = 0;
    std::set<std::pair<int, int>> surviving;
    for (auto [u, v] : g.edges()) {
        int a = vmap[u], b = vmap[v];
        if (a < 0 || b < 0 || !h.has_edge(a, b)) {
            delta += psi(g.degree(u), g.degree(v));
            continue;
        }
        surviving.insert(std::minmax(a, b));
        if (g.degree(u) != h.degree(a) || g.degree(v) != h.degree(b))
            delta += psi(g.degree(u), g.degree(v)) - psi(h.degree(a), h.degree(b));
    }
    for (auto [a, b] : h.edges())
        if (!surviving.count({a, b})) delta -= psi(h.degree(a), h.degree(b));
    return delta;
}

std::vector<int> removal_map(int n, const std::vector<int>& removed) {
    std::vector<int> vmap(n);
    std::vector<bool> gone(n, false);
    for (int v : removed) gone[v] = true;
    int next = 0;
    for (int v = 0; v < n; ++v) vmap[v] = gone[v] ? -1 : next++;
    return vmap;
}

std::vector<int> identity_map(int n) {
    std::vector<int> vmap(n);
    for (int v = 0; v < n; ++v) vmap[v] = v;
    return vmap;
}

RewriteOutcome finish(const Graph& g, Graph h, const std::vector<int>& vmap) {
    RewriteOutcome out{std::move(h), std::nullopt, false};
    out.azi_delta = incremental_delta(g, out.result, vmap);
    out.degree_sequence_preserved = g.degree_sequence() == out.result.degree_sequence();
    return out;
}

bool contract_applies(const Graph& g, int u, int v, int w) {
    if (u == v || u == w || v == w) return false;
    if (!g.has_edge(u, v) || !g.has_edge(u, w)) return false;
    if (g.degree(u) != 2 || g.degree(v) != 2 || g.degree(w) < 3) return false;
    if (g.has_edge(v, w)) return false;
    // u,v,w must share a cycle: the block holding uv must be a cycle through w.
    for (const auto& block : block_decomposition(g).blocks) {
        auto& es = block.edges;
        auto uv = std::minmax(u, v);
        if (std::find(es.begin(), es.end(), std::make_pair(uv.first, uv.second)) == es.end())
            continue;
        if (!block.is_cycle()) return false;
        return std::find(block.vertices.begin(), block.vertices.end(), w) !=
               block.vertices.end();
    }
    return false;
}

bool triangle_applies(const Graph& g, int u, int v, int w) {
    if (u == v || u == w || v == w) return false;
    if (!g.has_edge(u, v) || !g.has_edge(u, w) || !g.has_edge(v, w)) return false;
    return g.degree(u) == 2 && g.degree(v) == 2 && g.degree(w) >= 3;
}

} // namespace

RewriteOutcome contract_cycle_path(const Graph& g, int u, int v, int w) {
    require_vertex(g, u, "contract_cycle_path");
    require_vertex(g, v, "contract_cycle_path");
    require_vertex(g, w, "contract_cycle_path");
    if (!contract_applies(g, u, v, w))
        throw Error(ErrorKind::PatternMismatch,
                    "contract_cycle_path: need a cycle u-v .. u-w with d_u=d_v=2, d_w>=3, vw absent");
    const std::vector<int> removed{u};
    auto vmap = removal_map(g.vertex_count(), removed);
    Graph h = g.with_vertices_removed(removed).with_edge_added(vmap[v], vmap[w]);
    return finish(g, std::move(h), vmap);
}

RewriteOutcome delete_triangle_pair(const Graph& g, int u, int v, int w) {
    require_vertex(g, u, "delete_triangle_pair");
    require_vertex(g, v, "delete_triangle_pair");
    require_vertex(g, w, "delete_triangle_pair");
    if (!triangle_applies(g, u, v, w))
        throw Error(ErrorKind::PatternMismatch,
                    "delete_triangle_pair: need a triangle uvw with d_u=d_v=2, d_w>=3");
    std::vector<int> removed{std::min(u, v), std::max(u, v)};
    auto vmap = removal_map(g.vertex_count(), removed);
    return finish(g, g.with_vertices_removed(removed), vmap);
}

RewriteOutcome strip_pendants(const Graph& g, int v0) {
    require_vertex(g, v0, "strip_pendants");
    std::vector<int> pendants;
    for (int t : g.neighbors(v0))
        if (g.degree(t) == 1) pendants.push_back(t);
    if (pendants.empty())
        throw Error(ErrorKind::PatternMismatch, "strip_pendants: no pendant neighbor");
    auto vmap = removal_map(g.vertex_count(), pendants);
    Graph h = g.with_vertices_removed(pendants);
    if (h.vertex_count() > 1 && !is_connected(h))
        throw Error(ErrorKind::DegenerateResult, "strip_pendants: result is disconnected");
    return finish(g, std::move(h), vmap);
}

RewriteOutcome shift_degree2_vertex(const Graph& t, int path_vertex,
                                    std::pair<int, int> target_edge) {
    require_vertex(t, path_vertex, "shift_degree2_vertex");
    require_vertex(t, target_edge.first, "shift_degree2_vertex");
    require_vertex(t, target_edge.second, "shift_degree2_vertex");
    if (!is_tree(t))
        throw Error(ErrorKind::NotATree, "shift_degree2_vertex: input is not a tree");
    const int v2 = path_vertex;
    const auto [a, b] = target_edge;
    if (t.degree(v2) != 2)
        throw Error(ErrorKind::PatternMismatch, "shift_degree2_vertex: path_vertex must have degree 2");
    if (!t.has_edge(a, b))
        throw Error(ErrorKind::PatternMismatch, "shift_degree2_vertex: target_edge is not an edge");
    if (a == v2 || b == v2)
        throw Error(ErrorKind::PatternMismatch, "shift_degree2_vertex: target_edge touches path_vertex");
    const int v1 = t.neighbors(v2)[0], v3 = t.neighbors(v2)[1];
    Graph h = t.with_edge_removed(v1, v2)
                  .with_edge_removed(v2, v3)
                  .with_edge_removed(a, b)
                  .with_edge_added(v1, v3)
                  .with_edge_added(a, v2)
                  .with_edge_added(v2, b);
    return finish(t, std::move(h), identity_map(t.vertex_count()));
}

RewriteOutcome reattach_leaf(const Graph& t, int leaf, int new_support) {
    require_vertex(t, leaf, "reattach_leaf");
    require_vertex(t, new_support, "reattach_leaf");
    if (!is_tree(t)) throw Error(ErrorKind::NotATree, "reattach_leaf: input is not a tree");
    if (t.degree(leaf) != 1)
        throw Error(ErrorKind::PatternMismatch, "reattach_leaf: leaf must have degree 1");
    const int support = t.neighbors(leaf)[0];
    if (new_support == support || new_support == leaf)
        throw Error(ErrorKind::PatternMismatch, "reattach_leaf: new_support must be a different vertex");
    Graph h = t.with_edge_removed(leaf, support).with_edge_added(leaf, new_support);
    return finish(t, std::move(h), identity_map(t.vertex_count()));
}

std::vector<std::array<int, 3>> contract_cycle_path_matches(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != 2) continue;
        int x = g.neighbors(u)[0], y = g.neighbors(u)[1];
        if (contract_applies(g, u, x, y)) out.push_back({u, x, y});
        if (contract_applies(g, u, y, x)) out.push_back({u, y, x});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 3>> delete_triangle_pair_matches(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != 2) continue;
        int x = g.neighbors(u)[0], y = g.neighbors(u)[1];
        if (triangle_applies(g, u, x, y)) out.push_back({u, x, y});
        if (triangle_applies(g, u, y, x)) out.push_back({u, y, x});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> strip_pendants_matches(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool any = false;
        for (int t : g.neighbors(v)) any = any || g.degree(t) == 1;
        if (any) out.push_back(v);
    }
    return out;
}

namespace {

struct ClimbMove {
    Graph result;
    Rational azi_after;
    std::string desc;
};

std::vector<ClimbMove> climb_moves(const Graph& t, const Rational& azi_now) {
    std::vector<ClimbMove> out;
    auto push = [&](RewriteOutcome&& o, std::string desc) {
        if (!o.azi_delta) return;
        out.push_back({std::move(o.result), azi_now - *o.azi_delta, std::move(desc)});
    };
    const int n = t.vertex_count();
    const auto edges = t.edges();
    for (int v2 = 0; v2 < n; ++v2) {
        if (t.degree(v2) != 2) continue;
        for (auto [a, b] : edges) {
            if (a == v2 || b == v2) continue;
            std::ostringstream d;
            d << "shift " << v2 << " onto (" << a << "," << b << ")";
            push(shift_degree2_vertex(t, v2, {a, b}), d.str());
        }
    }
    for (int leaf = 0; leaf < n; ++leaf) {
        if (t.degree(leaf) != 1) continue;
        int support = t.neighbors(leaf)[0];
        for (int v = 0; v < n; ++v) {
            if (v == leaf || v == support) continue;
            std::ostringstream d;
            d << "reattach " << leaf << " -> " << v;
            push(reattach_leaf(t, leaf, v), d.str());
        }
    }
    return out;
}

} // namespace

ClimbTrace hill_climb_max_azi(const Graph& seed, long max_steps, std::uint64_t rng_seed) {
    if (!is_tree(seed)) throw Error(ErrorKind::NotATree, "hill_climb_max_azi: seed is not a tree");
    if (seed.vertex_count() < 3)
        throw Error(ErrorKind::UnsupportedGraph, "hill_climb_max_azi: need n >= 3");

    Graph cur = seed;
    Rational cur_azi = augmented_zagreb_index(cur);
    ClimbTrace trace{{}, cur, cur_azi, 0};
    std::mt19937_64 rng(rng_seed);
    int kicks = 0;

    auto note_best = [&](const std::string& desc) {
        if (cur_azi > trace.best_azi) {
            trace.best = cur;
            trace.best_azi = cur_azi;
            trace.steps.push_back({desc, cur_azi, graph6_encode(cur)});
        }
    };

    while (trace.moves_applied < max_steps) {
        auto moves = climb_moves(cur, cur_azi);
        if (moves.empty()) break;

        const ClimbMove* best = nullptr;
        for (const auto& m : moves) {
            if (m.azi_after <= cur_azi) continue;
            if (!best || m.azi_after > best->azi_after ||
                (m.azi_after == best->azi_after &&
                 canonical_form(m.result) < canonical_form(best->result)))
                best = &m;
        }
        if (best) {
            cur = best->result;
            cur_azi = best->azi_after;
            ++trace.moves_applied;
            note_best(best->desc);
            continue;
        }
        // Local optimum: kick with a few random moves, then climb again.
        int strength = 1 + kicks++ % 3;
        for (int i = 0; i < strength && trace.moves_applied < max_steps; ++i) {
            auto pool = climb_moves(cur, cur_azi);
            if (pool.empty()) break;
            auto& pick = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            cur = pick.result;
            cur_azi = pick.azi_after;
            ++trace.moves_applied;
            note_best("kick: " + pick.desc);
        }
    }
    return trace;
}

} // namespace azi
