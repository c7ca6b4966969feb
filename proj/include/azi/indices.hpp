#ifndef AZI_INDICES_HPP
#define AZI_INDICES_HPP

#include "azi/graph.hpp"
#include "azi/rational.hpp"

#include <functional>
#include <optional>
#include <string>

namespace azi {

// Psi(x,y) = (xy / (x+y-2))^3, the augmented Zagreb edge weight, exact.
// Throws Error{DegenerateEdge} when x == y == 1 (zero denominator) and
// Error{OutOfDomain} for nonpositive degrees.
Rational psi(int x, int y);

// Edge-weight function (d_u, d_v) -> value defining a bond-incident-degree
// index. weight must be symmetric; exact_weight, when present, must agree
// with weight.
struct IndexKernel {
    std::string name;
    std::function<double(int, int)> weight;
    std::function<Rational(int, int)> exact_weight; // may be empty
    bool has_exact() const { return static_cast<bool>(exact_weight); }
};

const IndexKernel& azi_kernel();
const IndexKernel& abc_kernel();
IndexKernel constant_kernel(double c);

// Augmented Zagreb index, exact. Requires g connected with n >= 3; throws
// Error{UnsupportedGraph} otherwise (K2 has the degenerate (1,1) edge).
Rational augmented_zagreb_index(const Graph& g);

// Atom-bond connectivity index sum_{uv} sqrt((d_u+d_v-2)/(d_u d_v)), binary64.
// Requires g connected with n >= 2.
double atom_bond_connectivity_index(const Graph& g);

struct IndexValue {
    double value = 0.0;
    std::optional<Rational> exact;
};

// Generic edge sum of a kernel; exact part filled when the kernel has an
// exact weight. Throws Error{DegenerateEdge} if the kernel is undefined on
// some degree pair of g.
IndexValue bid_index(const Graph& g, const IndexKernel& kernel);

// F(n,k) = (n-2k-1)((n-1)/(n-2))^3 + 24k, exact. Throws Error{OutOfDomain}
// for n <= 2 or k < 0.
Rational f_bound(int n, int k);

// f(x,y) = Psi(x,y) - Psi(x-p,y) on real arguments, per the monotonicity
// lemma's domain p >= 1, x > p, x >= 2, y >= 2. Throws Error{OutOfDomain}.
double kernel_gap(double x, double y, double p);

// Internal edge sum used by the rewrite bookkeeping: defined for any graph
// without a (1,1) edge (empty sum = 0), regardless of connectivity.
std::optional<Rational> azi_edge_sum(const Graph& g);

} // namespace azi

#endif
