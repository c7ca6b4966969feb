#ifndef AZI_TRANSFORM_HPP
#define AZI_TRANSFORM_HPP

#include "azi/graph.hpp"
#include "azi/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace azi {

struct RewriteOutcome {
    Graph result;
    // azi(input) - azi(result), tracked incrementally over the touched edges.
    // Empty exactly when one side's AZI is undefined (a (1,1) edge, i.e. the
    // result collapsed to K2).
    std::optional<Rational> azi_delta;
    bool degree_sequence_preserved = false;
};

// Cycle shortening: u on a cycle with neighbors v,w, d_u = d_v = 2,
// d_w >= 3, vw not an edge. Removes u, adds vw. AZI drops by exactly 8.
RewriteOutcome contract_cycle_path(const Graph& g, int u, int v, int w);

// Triangle removal: u,v,w a triangle with d_u = d_v = 2, d_w >= 3. Removes
// u and v; AZI drops by 24 + sum over the other neighbors t of w of
// [Psi(d_w, d_t) - Psi(d_w - 2, d_t)].
RewriteOutcome delete_triangle_pair(const Graph& g, int u, int v, int w);

// Removes all p >= 1 pendant neighbors of v0 (degree y). AZI drops by
// p*Psi(1,y) + sum over the non-pendant neighbors t of
// [Psi(y, d_t) - Psi(y - p, d_t)].
RewriteOutcome strip_pendants(const Graph& g, int v0);

// Tree move: splice the degree-2 vertex v2 (neighbors v1, v3) into
// target_edge and add v1v3. Preserves the degree multiset.
RewriteOutcome shift_degree2_vertex(const Graph& t, int path_vertex,
                                    std::pair<int, int> target_edge);

// Tree move: delete the leaf's support edge and re-home the leaf onto
// new_support.
RewriteOutcome reattach_leaf(const Graph& t, int leaf, int new_support);

// All (u,v,w) triples where contract_cycle_path applies, lexicographic.
std::vector<std::array<int, 3>> contract_cycle_path_matches(const Graph& g);
std::vector<std::array<int, 3>> delete_triangle_pair_matches(const Graph& g);
std::vector<int> strip_pendants_matches(const Graph& g);

struct ClimbStep {
    std::string move;
    Rational azi_after;
    std::string graph6_after;
};

struct ClimbTrace {
    std::vector<ClimbStep> steps; // new best-so-far states, AZI non-decreasing
    Graph best;
    Rational best_azi;
    long moves_applied = 0;
};

// Iterated local search for high-AZI trees: best-improvement over all
// shift_degree2_vertex / reattach_leaf moves (exact comparisons, ties broken
// by canonical code), with seeded random kicks to escape local optima until
// the move budget is spent. Deterministic given rng_seed. The trace records
// each new best-so-far state, so its AZI column is non-decreasing.
ClimbTrace hill_climb_max_azi(const Graph& seed, long max_steps, std::uint64_t rng_seed);

} // namespace azi

#endif
