#include "azi/families.hpp"

#include "azi/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace azi {

namespace {

const char* kind_name(FamilySpec::Kind k) {
    switch (k) {
    case FamilySpec::Kind::Star: return "star";
    case FamilySpec::Kind::Path: return "path";
    case FamilySpec::Kind::Cycle: return "cycle";
    case FamilySpec::Kind::G0: return "g0";
    case FamilySpec::Kind::TPlus: return "tplus";
    }
    return "?";
}

int parse_count(const std::string& text, const std::string& whole) {
    if (text.empty()) throw Error(ErrorKind::InvalidSpec, "family spec '" + whole + "': missing count");
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw Error(ErrorKind::InvalidSpec, "family spec '" + whole + "': bad count '" + text + "'");
    try {
        return std::stoi(text);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidSpec, "family spec '" + whole + "': count out of range");
    }
}

} // namespace

std::string FamilySpec::to_string() const {
    std::ostringstream out;
    out << kind_name(kind) << ':' << n;
    if (kind == Kind::G0) out << ',' << k;
    return out.str();
}

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::InvalidSpec, "family spec '" + text + "': expected kind:count");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    FamilySpec spec;
    if (kind == "star")
        spec.kind = FamilySpec::Kind::Star;
    else if (kind == "path")
        spec.kind = FamilySpec::Kind::Path;
    else if (kind == "cycle")
        spec.kind = FamilySpec::Kind::Cycle;
    else if (kind == "g0")
        spec.kind = FamilySpec::Kind::G0;
    else if (kind == "tplus")
        spec.kind = FamilySpec::Kind::TPlus;
    else
        throw Error(ErrorKind::InvalidSpec, "family spec '" + text + "': unknown kind '" + kind + "'");

    auto comma = rest.find(',');
    if (spec.kind == FamilySpec::Kind::G0) {
        if (comma == std::string::npos)
            throw Error(ErrorKind::InvalidSpec, "family spec '" + text + "': g0 needs n,k");
        spec.n = parse_count(rest.substr(0, comma), text);
        spec.k = parse_count(rest.substr(comma + 1), text);
    } else {
        if (comma != std::string::npos)
            throw Error(ErrorKind::InvalidSpec, "family spec '" + text + "': unexpected ','");
        spec.n = parse_count(rest, text);
    }
    return spec;
}

Graph construct(const FamilySpec& spec) {
    const int n = spec.n;
    auto reject = [&](const char* why) {
        throw Error(ErrorKind::InvalidSpec, "family spec '" + spec.to_string() + "': " + why);
    };
    switch (spec.kind) {
    case FamilySpec::Kind::Star: {
        if (n < 1) reject("need n >= 1");
        GraphBuilder b(n);
        for (int v = 1; v < n; ++v) b.add_edge(0, v);
        return b.finish();
    }
    case FamilySpec::Kind::Path: {
        if (n < 1) reject("need n >= 1");
        GraphBuilder b(n);
        for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
        return b.finish();
    }
    case FamilySpec::Kind::Cycle: {
        if (n < 3) reject("need n >= 3");
        GraphBuilder b(n);
        for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
        b.add_edge(n - 1, 0);
        return b.finish();
    }
    case FamilySpec::Kind::G0: {
        if (n < 3) reject("need n >= 3");
        if (spec.k < 0 || 2 * spec.k > n - 1) reject("need 0 <= k <= (n-1)/2");
        GraphBuilder b(n);
        for (int v = 1; v < n; ++v) b.add_edge(0, v);
        for (int i = 0; i < spec.k; ++i) b.add_edge(2 * i + 1, 2 * i + 2);
        return b.finish();
    }
    case FamilySpec::Kind::TPlus: {
        if (n < 10) reject("need n >= 10");
        GraphBuilder b(n);
        b.add_edge(0, 1);
        int chain_total = n - 2;
        int next = 2;
        for (int c = 0; c < 4; ++c) {
            int len = chain_total / 4 + (c < chain_total % 4 ? 1 : 0);
            int hub = c < 2 ? 0 : 1;
            int prev = hub;
            for (int i = 0; i < len; ++i, ++next) {
                b.add_edge(prev, next);
                prev = next;
            }
        }
        return b.finish();
    }
    }
    throw Error(ErrorKind::InvalidSpec, "family spec: unknown kind");
}

std::vector<PathWitness> pendent_and_internal_paths(const Graph& g) {
    std::vector<PathWitness> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) <= 2) continue;
        for (int first : g.neighbors(u)) {
            std::vector<int> walk{u, first};
            int prev = u, cur = first;
            while (g.degree(cur) == 2) {
                int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                walk.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            if (g.degree(cur) == 1) {
                std::reverse(walk.begin(), walk.end());
                out.push_back({std::move(walk), PathWitness::Kind::Pendent});
            } else if (cur != u && u < cur) {
                // internal chain; the walk from the other endpoint is skipped
                out.push_back({std::move(walk), PathWitness::Kind::Internal});
            }
        }
    }
    return out;
}

std::vector<int> star_type_pendent_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) > 2) out.push_back(v);
    return out;
}

Theorem2Report theorem2_report(const Graph& t) {
    if (!is_tree(t)) throw Error(ErrorKind::NotATree, "theorem2_report: input is not a tree");
    Theorem2Report r;
    for (const auto& w : pendent_and_internal_paths(t)) {
        if (w.kind == PathWitness::Kind::Internal && w.length() >= 2) r.has_internal_path_ge2 = true;
        if (w.kind == PathWitness::Kind::Pendent && w.length() >= 4) r.has_pendent_path_ge4 = true;
        if (w.kind == PathWitness::Kind::Pendent && w.length() == 3) ++r.pendent_paths_len3;
    }
    return r;
}

bool every_edge_deg2_incident(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) != 2 && g.degree(v) != 2) return false;
    return true;
}

} // namespace azi
