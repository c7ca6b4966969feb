#include "azi/graph6.hpp"

#include "azi/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <utility>

namespace azi {

namespace {

constexpr char kHeader[] = ">>graph6<<";

void append_groups(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int group = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            group <<= 1;
            if (i + j < bits.size() && bits[i + j]) group |= 1;
        }
        out.push_back(static_cast<char>(group + 63));
    }
}

int group_value(char c) {
    if (c < 63 || c > 126) throw Error(ErrorKind::ParseError, "graph6: byte out of range");
    return c - 63;
}

} // namespace

std::string graph6_encode(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw Error(ErrorKind::UnsupportedGraph, "graph6: order too large to encode");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    append_groups(out, bits);
    return out;
}

Graph graph6_decode(const std::string& line) {
    std::string s = line;
    const std::string header = kHeader;
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw Error(ErrorKind::ParseError, "graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = group_value(s[0]);
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~') {
            if (s.size() < 8) throw Error(ErrorKind::ParseError, "graph6: truncated order");
            n = 0;
            for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | group_value(s[i]);
            pos = 8;
        } else {
            if (s.size() < 4) throw Error(ErrorKind::ParseError, "graph6: truncated order");
            n = 0;
            for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | group_value(s[i]);
            pos = 4;
        }
    }
    if (n > 100000) throw Error(ErrorKind::ParseError, "graph6: order out of supported range");

    const long long nbits = n * (n - 1) / 2;
    const std::size_t ngroups = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != ngroups) {
        std::ostringstream msg;
        msg << "graph6: expected " << ngroups << " body bytes, got " << (s.size() - pos);
        throw Error(ErrorKind::ParseError, msg.str());
    }

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int u = 0, v = 1;
    for (std::size_t i = pos; i < s.size(); ++i) {
        int group = group_value(s[i]);
        for (int j = 5; j >= 0; --j, ++bit) {
            bool set = (group >> j) & 1;
            if (bit < nbits) {
                if (set) edges.emplace_back(u, v);
                if (++u == v) {
                    u = 0;
                    ++v;
                }
            } else if (set) {
                throw Error(ErrorKind::ParseError, "graph6: nonzero padding bits");
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::vector<Graph> graph6_decode_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

} // namespace azi
