#include "azi/indices.hpp"

#include "azi/errors.hpp"

#include <cmath>
#include <sstream>

namespace azi {

Rational psi(int x, int y) {
    if (x <= 0 || y <= 0) {
        std::ostringstream msg;
        msg << "psi: degrees must be positive, got (" << x << "," << y << ")";
        throw Error(ErrorKind::OutOfDomain, msg.str());
    }
    if (x == 1 && y == 1) throw Error(ErrorKind::DegenerateEdge, "psi(1,1) is undefined");
    Rational base = Rational(BigInt(x) * y, BigInt(x) + y - 2);
    return base * base * base;
}

const IndexKernel& azi_kernel() {
    static const IndexKernel k{
        "azi",
        [](int x, int y) { return to_double(psi(x, y)); },
        [](int x, int y) { return psi(x, y); },
    };
    return k;
}

const IndexKernel& abc_kernel() {
    static const IndexKernel k{
        "abc",
        [](int x, int y) {
            if (x <= 0 || y <= 0) throw Error(ErrorKind::OutOfDomain, "abc: degrees must be positive");
            return std::sqrt(static_cast<double>(x + y - 2) / (static_cast<double>(x) * y));
        },
        nullptr,
    };
    return k;
}

IndexKernel constant_kernel(double c) {
    BigInt num(static_cast<long long>(c)); // exact only when c is integral
    bool integral = static_cast<double>(static_cast<long long>(c)) == c;
    IndexKernel k{"constant", [c](int, int) { return c; }, nullptr};
    if (integral) k.exact_weight = [num](int, int) { return Rational(num); };
    return k;
}

Rational augmented_zagreb_index(const Graph& g) {
    if (g.vertex_count() < 3)
        throw Error(ErrorKind::UnsupportedGraph, "augmented_zagreb_index: need n >= 3");
    if (!is_connected(g))
        throw Error(ErrorKind::UnsupportedGraph, "augmented_zagreb_index: graph must be connected");
    Rational total = 0;
    for (auto [u, v] : g.edges()) total += psi(g.degree(u), g.degree(v));
    return total;
}

double atom_bond_connectivity_index(const Graph& g) {
    if (g.vertex_count() < 2)
        throw Error(ErrorKind::UnsupportedGraph, "atom_bond_connectivity_index: need n >= 2");
    if (!is_connected(g))
        throw Error(ErrorKind::UnsupportedGraph, "atom_bond_connectivity_index: graph must be connected");
    const auto& k = abc_kernel();
    double total = 0.0;
    for (auto [u, v] : g.edges()) total += k.weight(g.degree(u), g.degree(v));
    return total;
}

IndexValue bid_index(const Graph& g, const IndexKernel& kernel) {
    IndexValue out;
    if (kernel.has_exact()) {
        Rational total = 0;
        for (auto [u, v] : g.edges()) total += kernel.exact_weight(g.degree(u), g.degree(v));
        out.exact = total;
        out.value = to_double(total);
    } else {
        double total = 0.0;
        for (auto [u, v] : g.edges()) total += kernel.weight(g.degree(u), g.degree(v));
        out.value = total;
    }
    return out;
}

Rational f_bound(int n, int k) {
    if (n <= 2 || k < 0) {
        std::ostringstream msg;
        msg << "f_bound: need n >= 3 and k >= 0, got (" << n << "," << k << ")";
        throw Error(ErrorKind::OutOfDomain, msg.str());
    }
    Rational ratio(BigInt(n) - 1, BigInt(n) - 2);
    return Rational(BigInt(n) - 2 * k - 1) * ratio * ratio * ratio + Rational(24 * BigInt(k));
}

double kernel_gap(double x, double y, double p) {
    if (!(p >= 1.0 && x > p && x >= 2.0 && y >= 2.0)) {
        std::ostringstream msg;
        msg << "kernel_gap: (x,y,p)=(" << x << "," << y << "," << p
            << ") outside p >= 1, x > p, x >= 2, y >= 2";
        throw Error(ErrorKind::OutOfDomain, msg.str());
    }
    auto cube = [](double t) { return t * t * t; };
    double a = cube(x * y / (x + y - 2.0));
    double b = cube((x - p) * y / (x - p + y - 2.0));
    return a - b;
}

std::optional<Rational> azi_edge_sum(const Graph& g) {
    Rational total = 0;
    for (auto [u, v] : g.edges()) {
        int x = g.degree(u), y = g.degree(v);
        if (x == 1 && y == 1) return std::nullopt;
        total += psi(x, y);
    }
    return total;
}

} // namespace azi
