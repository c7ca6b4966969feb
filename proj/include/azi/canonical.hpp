#ifndef AZI_CANONICAL_HPP
#define AZI_CANONICAL_HPP

#include "azi/graph.hpp"

#include <string>

namespace azi {

// Canonical byte string of an isomorphism class: the graph6 encoding of the
// canonically relabeled graph. Equal codes <=> isomorphic graphs.
using CanonicalCode = std::string;

// Exact canonical form via color refinement plus individualization
// backtracking. Correctness over speed; intended for n up to ~20.
CanonicalCode canonical_form(const Graph& g);

// The canonically relabeled graph itself (decode(canonical_form(g))).
Graph canonical_graph(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && canonical_form(a) == canonical_form(b);
}

} // namespace azi

#endif
