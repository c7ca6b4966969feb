#include "azi/enumerate.hpp"

#include "azi/canonical.hpp"
#include "azi/errors.hpp"
#include "azi/graph6.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <utility>

namespace azi {

namespace {

// ---------------------------------------------------------------------------
// Free trees: canonical rooted level sequences (preorder depths, subtrees in
// non-increasing lexicographic order), generated in decreasing lexicographic
// order from the path [0,1,...,n-1] down to the star [0,1,...,1], filtered to
// one rooting per free tree (root must be a centroid; for bicentral trees the
// lexicographically larger of the two centroid rootings wins).
// ---------------------------------------------------------------------------

// Successor in decreasing lex order: find the last vertex deeper than 1,
// promote it by tiling the block that starts at its parent.
bool advance_level_sequence(std::vector<int>& level) {
    const int n = static_cast<int>(level.size());
    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
        if (level[i] > 1) {
            p = i;
            break;
        }
    }
    if (p < 0) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
        if (level[i] == level[p] - 1) {
            q = i;
            break;
        }
    }
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    return true;
}

std::vector<int> parents_of(const std::vector<int>& level) {
    const int n = static_cast<int>(level.size());
    std::vector<int> parent(n, -1), last_at_depth(n + 1, -1);
    last_at_depth[0] = 0;
    for (int i = 1; i < n; ++i) {
        parent[i] = last_at_depth[level[i] - 1];
        last_at_depth[level[i]] = i;
    }
    return parent;
}

Graph tree_from_parents(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(parent[i], i);
    return std::move(b).finish();
}

// Centroids (1 or 2 vertices minimizing the largest component of t - v),
// straight from the parent array: preorder puts children after parents.
std::vector<int> centroids_of(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    std::vector<int> size(n, 1), heaviest_child(n, 0);
    for (int i = n - 1; i >= 1; --i) {
        size[parent[i]] += size[i];
        heaviest_child[parent[i]] = std::max(heaviest_child[parent[i]], size[i]);
    }
    std::vector<int> out;
    int best = n + 1;
    for (int v = 0; v < n; ++v) {
        int weight = std::max(heaviest_child[v], n - size[v]);
        if (weight < best) {
            best = weight;
            out.assign(1, v);
        } else if (weight == best) {
            out.push_back(v);
        }
    }
    return out;
}

class TreeStream final : public GraphStream {
public:
    explicit TreeStream(int n) : n_(n) {}

    std::optional<Graph> next() override {
        while (!done_) {
            if (level_.empty()) {
                level_.resize(n_);
                for (int i = 0; i < n_; ++i) level_[i] = i;
            } else if (!advance_level_sequence(level_)) {
                done_ = true;
                break;
            }
            auto parent = parents_of(level_);
            auto centers = centroids_of(parent);
            if (std::find(centers.begin(), centers.end(), 0) == centers.end()) continue;
            Graph t = tree_from_parents(parent);
            if (centers.size() == 2) {
                int other = centers[0] == 0 ? centers[1] : centers[0];
                if (level_ < enumeration_detail::canonical_level_sequence(t, other)) continue;
            }
            return t;
        }
        return std::nullopt;
    }

    std::unique_ptr<GraphStream> clone() const override {
        return std::make_unique<TreeStream>(n_);
    }

private:
    int n_;
    std::vector<int> level_; // empty until the first pull
    bool done_ = false;
};

// ---------------------------------------------------------------------------
// Cacti: bottom-up block augmentation. Every cactus with more than one block
// has a leaf block — a pendant edge or a cycle hanging at one cut vertex —
// whose removal is a smaller cactus, so growing set(n-1,k) by pendant edges
// and set(n-c+1,k-1) by c-cycles reaches every isomorphism class. Duplicates
// are rejected by canonical code; levels are memoized since scans at (n,k)
// revisit every smaller cell.
// ---------------------------------------------------------------------------

Graph grow_pendant(const Graph& g, int at) {
    auto edges = g.edges();
    edges.emplace_back(at, g.vertex_count());
    return Graph::from_edge_list(g.vertex_count() + 1, edges);
}

Graph grow_cycle(const Graph& g, int at, int c) {
    auto edges = g.edges();
    const int base = g.vertex_count();
    edges.emplace_back(at, base);
    for (int i = 0; i + 1 < c - 1; ++i) edges.emplace_back(base + i, base + i + 1);
    edges.emplace_back(base + c - 2, at);
    return Graph::from_edge_list(base + c - 1, edges);
}

using Level = std::shared_ptr<const std::vector<Graph>>;

class CactiTable {
public:
    Level get(int n, int k) {
        std::lock_guard<std::mutex> lock(mu_);
        for (int kk = 0; kk <= k; ++kk)
            for (int nn = 1; nn <= n; ++nn)
                if (!memo_.count({nn, kk})) memo_[{nn, kk}] = build(nn, kk);
        return memo_.at({n, k});
    }

private:
    Level build(int n, int k) const {
        std::map<CanonicalCode, bool> seen;
        auto out = std::make_shared<std::vector<Graph>>();
        if (n < 2 * k + 1) return out;
        if (n == 1) {
            out->push_back(Graph::single_vertex());
            return out;
        }
        auto offer = [&](const Graph& g) { seen.emplace(canonical_form(g), true); };
        for (const Graph& parent : *memo_.at({n - 1, k}))
            for (int v = 0; v < parent.vertex_count(); ++v) offer(grow_pendant(parent, v));
        for (int c = 3; k >= 1 && n - c + 1 >= 1; ++c)
            for (const Graph& parent : *memo_.at({n - c + 1, k - 1}))
                for (int v = 0; v < parent.vertex_count(); ++v) offer(grow_cycle(parent, v, c));
        out->reserve(seen.size());
        for (const auto& [code, unused] : seen) out->push_back(graph6_decode(code));
        return out;
    }

    mutable std::mutex mu_;
    std::map<std::pair<int, int>, Level> memo_;
};

CactiTable& cacti_table() {
    static CactiTable table;
    return table;
}

class VectorStream final : public GraphStream {
public:
    VectorStream(Level data, bool empty_domain) : data_(std::move(data)), empty_(empty_domain) {}

    std::optional<Graph> next() override {
        if (pos_ >= data_->size()) return std::nullopt;
        return (*data_)[pos_++];
    }

    bool empty_domain() const override { return empty_; }

    std::unique_ptr<GraphStream> clone() const override {
        return std::make_unique<VectorStream>(data_, empty_);
    }

private:
    Level data_;
    std::size_t pos_ = 0;
    bool empty_;
};

// ---------------------------------------------------------------------------
// Brute-force oracle: all edge subsets of K_n of the right size, filtered.
// ---------------------------------------------------------------------------

Level brute_force_level(int n, int k) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    const int total = static_cast<int>(all.size());
    const int m = n - 1 + k;

    std::map<CanonicalCode, bool> seen;
    if (n == 1 && k == 0) seen.emplace(canonical_form(Graph::single_vertex()), true);
    if (m >= 1 && m <= total) {
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        for (;;) {
            std::vector<std::pair<int, int>> edges;
            edges.reserve(m);
            for (int i : idx) edges.push_back(all[i]);
            Graph g = Graph::from_edge_list(n, edges);
            if (is_connected(g) && is_cactus(g)) seen.emplace(canonical_form(g), true);

            int i = m - 1;
            while (i >= 0 && idx[i] == total - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    auto out = std::make_shared<std::vector<Graph>>();
    out->reserve(seen.size());
    for (const auto& [code, unused] : seen) out->push_back(graph6_decode(code));
    return out;
}

class StridedStream final : public GraphStream {
public:
    StridedStream(std::unique_ptr<GraphStream> base, long offset, long stride)
        : base_(std::move(base)), offset_(offset), stride_(stride) {}

    std::optional<Graph> next() override {
        long skip = first_ ? offset_ : stride_ - 1;
        first_ = false;
        for (long i = 0; i < skip; ++i)
            if (!base_->next()) return std::nullopt;
        return base_->next();
    }

    bool empty_domain() const override { return base_->empty_domain(); }

    std::unique_ptr<GraphStream> clone() const override {
        return std::make_unique<StridedStream>(base_->clone(), offset_, stride_);
    }

private:
    std::unique_ptr<GraphStream> base_;
    long offset_, stride_;
    bool first_ = true;
};

void require_feasible_counts(int n, int k) {
    if (n < 1 || k < 0)
        throw Error(ErrorKind::InvalidSpec, "enumeration needs n >= 1 and k >= 0");
}

} // namespace

std::unique_ptr<GraphStream> trees(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "trees: need n >= 1");
    return std::make_unique<TreeStream>(n);
}

std::unique_ptr<GraphStream> cacti(int n, int k) {
    require_feasible_counts(n, k);
    if (n < 2 * k + 1)
        return std::make_unique<VectorStream>(std::make_shared<std::vector<Graph>>(), true);
    return std::make_unique<VectorStream>(cacti_table().get(n, k), false);
}

std::unique_ptr<GraphStream> brute_force_cacti(int n, int k) {
    require_feasible_counts(n, k);
    if (n > 8)
        throw Error(ErrorKind::RefusedTooLarge, "brute_force_cacti: labeled enumeration capped at n <= 8");
    if (n < 2 * k + 1)
        return std::make_unique<VectorStream>(std::make_shared<std::vector<Graph>>(), true);
    return std::make_unique<VectorStream>(brute_force_level(n, k), false);
}

std::unique_ptr<GraphStream> strided_stream(std::unique_ptr<GraphStream> base,
                                            long offset, long stride) {
    if (!base || offset < 0 || stride < 1 || offset >= stride)
        throw Error(ErrorKind::InvalidSpec, "strided_stream: need 0 <= offset < stride");
    return std::make_unique<StridedStream>(std::move(base), offset, stride);
}

std::vector<Graph> collect(GraphStream& stream, std::optional<long> max_results) {
    std::vector<Graph> out;
    while (!max_results || static_cast<long>(out.size()) < *max_results) {
        auto g = stream.next();
        if (!g) break;
        out.push_back(std::move(*g));
    }
    return out;
}

namespace enumeration_detail {

std::vector<int> canonical_level_sequence(const Graph& tree, int root) {
    std::function<std::vector<int>(int, int, int)> seq = [&](int v, int parent,
                                                             int depth) -> std::vector<int> {
        std::vector<std::vector<int>> kids;
        for (int w : tree.neighbors(v))
            if (w != parent) kids.push_back(seq(w, v, depth + 1));
        std::sort(kids.begin(), kids.end(), std::greater<>());
        std::vector<int> out{depth};
        for (auto& k : kids) out.insert(out.end(), k.begin(), k.end());
        return out;
    };
    return seq(root, -1, 0);
}

long rooted_tree_count(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "rooted_tree_count: need n >= 1");
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i;
    long count = 1;
    while (advance_level_sequence(level)) ++count;
    return count;
}

} // namespace enumeration_detail

} // namespace azi
