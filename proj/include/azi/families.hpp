#ifndef AZI_FAMILIES_HPP
#define AZI_FAMILIES_HPP

#include "azi/graph.hpp"

#include <string>
#include <vector>

namespace azi {

// Symbolic description of a constructed family member.
struct FamilySpec {
    enum class Kind { Star, Path, Cycle, G0, TPlus };
    Kind kind = Kind::Path;
    int n = 0;
    int k = 0; // G0 only

    std::string to_string() const;
};

// Parses the compact CLI syntax: "star:7", "path:10", "cycle:5", "g0:9,3",
// "tplus:12". Throws Error{InvalidSpec}.
FamilySpec parse_family_spec(const std::string& text);

// Builds the named graph. Deterministic labeling:
//   Star/G0: center 0, leaves 1..n-1; G0 pairs leaves (1,2),(3,4),...
//   Path: 0-1-...-(n-1).  Cycle: 0-1-...-(n-1)-0.
//   TPlus: hubs 0,1 joined by an edge, four pendant chains of length >= 2
//          (lengths as balanced as possible), so the hub edge is the unique
//          edge with both endpoint degrees 3 and every other edge has an
//          endpoint of degree 2.
// Throws Error{InvalidSpec} when the spec's bounds are violated.
Graph construct(const FamilySpec& spec);

struct PathWitness {
    enum class Kind { Pendent, Internal };
    std::vector<int> vertices; // v_1 .. v_{l+1}
    Kind kind = Kind::Pendent;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// All maximal paths whose interior vertices have degree 2 and whose endpoint
// degrees are (1, >2) [pendent] or (>2, >2) [internal]. Pendent witnesses
// start at the degree-1 end; internal witnesses start at the smaller-labeled
// endpoint. Closed degree-2 walks (cycles) are not paths and are skipped.
std::vector<PathWitness> pendent_and_internal_paths(const Graph& g);

// Degree-1 vertices whose neighbor has degree > 2, sorted.
std::vector<int> star_type_pendent_vertices(const Graph& g);

struct Theorem2Report {
    bool has_internal_path_ge2 = false;
    bool has_pendent_path_ge4 = false;
    int pendent_paths_len3 = 0;

    bool operator==(const Theorem2Report&) const = default;
};

// Structural flags for the max-AZI theorem; input must be a tree
// (throws Error{NotATree}).
Theorem2Report theorem2_report(const Graph& t);

// True iff each edge has an endpoint of degree 2. Such a graph has every
// edge weight equal to 8, hence AZI = 8m.
bool every_edge_deg2_incident(const Graph& g);

} // namespace azi

#endif
