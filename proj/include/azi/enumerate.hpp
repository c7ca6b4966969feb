#ifndef AZI_ENUMERATE_HPP
#define AZI_ENUMERATE_HPP

#include "azi/graph.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace azi {

struct EnumSpec {
    int n = 0;
    int k = 0;                        // 0 for trees
    std::optional<long> max_results;  // cap on emitted graphs

    static int max_cycles(int n) { return (n - 1) / 2; }
    bool feasible() const { return n >= 1 && k >= 0 && k <= max_cycles(n); }
};

// Ordered, deterministic source of pairwise non-isomorphic graphs. A stream
// is single-consumer; clone() restarts an identical stream from the
// beginning, which is how scans hand independent sub-streams to workers.
class GraphStream {
public:
    virtual ~GraphStream() = default;
    virtual std::optional<Graph> next() = 0;
    virtual bool empty_domain() const { return false; }
    virtual std::unique_ptr<GraphStream> clone() const = 0;
};

// Every isomorphism class of n-vertex trees exactly once, by canonical
// level-sequence (free-tree) generation. n >= 1; throws Error{InvalidSpec}.
std::unique_ptr<GraphStream> trees(int n);

// Every isomorphism class of connected cacti with n vertices and k cycles
// exactly once, by block augmentation with canonical-code duplicate
// rejection; emitted in canonical-code order. Infeasible (n < 2k+1) specs
// yield an empty stream with empty_domain() set.
std::unique_ptr<GraphStream> cacti(int n, int k);

// Reference semantics for cacti(): all labeled graphs on n vertices with
// m = n-1+k edges, filtered to connected cacti, deduplicated by canonical
// code. n <= 8; throws Error{RefusedTooLarge}.
std::unique_ptr<GraphStream> brute_force_cacti(int n, int k);

// Keeps every stride-th graph starting at offset; used to partition a
// deterministic stream across workers.
std::unique_ptr<GraphStream> strided_stream(std::unique_ptr<GraphStream> base,
                                            long offset, long stride);

std::vector<Graph> collect(GraphStream& stream,
                           std::optional<long> max_results = std::nullopt);

namespace enumeration_detail {

// Canonical rooted level sequence (preorder depths, children subtrees in
// non-increasing lexicographic order). Exposed for tests.
std::vector<int> canonical_level_sequence(const Graph& tree, int root);

// Number of canonical rooted level sequences on n vertices (= rooted trees
// up to isomorphism). Exposed for tests.
long rooted_tree_count(int n);

} // namespace enumeration_detail

} // namespace azi

#endif
