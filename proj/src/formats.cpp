#include "bunklab/formats.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bunklab {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

WeightedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++lineno;
    auto head = split_ws(line);
    if (head.size() != 2) throw ParseError(lineno, "header must be \"n m\"");
    long n, m;
    try {
        n = std::stol(head[0]);
        m = std::stol(head[1]);
    } catch (const std::exception&) {
        throw ParseError(lineno, "header must be \"n m\"");
    }
    if (n < 0 || m < 0) throw ParseError(lineno, "negative counts");

    WeightedGraph g;
    g.vertex_count = static_cast<int>(n);
    for (long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of input");
        ++lineno;
        auto tok = split_ws(line);
        if (tok.size() != 3) throw ParseError(lineno, "edge line must be \"u v p\"");
        long u, v;
        try {
            u = std::stol(tok[0]);
            v = std::stol(tok[1]);
        } catch (const std::exception&) {
            throw ParseError(lineno, "malformed endpoint");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "endpoint index out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        Rat p;
        try {
            p = parse_rational(tok[2]);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        if (!is_probability(p)) throw ParseError(lineno, "probability outside [0,1]");
        g.add_edge(static_cast<int>(u), static_cast<int>(v), std::move(p));
    }
    // Trailing blank lines are tolerated; anything else is an error.
    while (std::getline(in, line)) {
        ++lineno;
        if (!split_ws(line).empty()) throw ParseError(lineno, "trailing content after edge list");
    }
    return g;
}

std::string emit_edge_list(const WeightedGraph& g) {
    std::vector<size_t> order(g.edges.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const auto& ea = g.edges[a];
        const auto& eb = g.edges[b];
        auto ka = std::minmax(ea.u, ea.v);
        auto kb = std::minmax(eb.u, eb.v);
        return ka < kb;
    });
    std::string out = std::to_string(g.vertex_count) + " " + std::to_string(g.edges.size()) + "\n";
    for (size_t i : order) {
        const auto& e = g.edges[i];
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + rat_to_string(e.open_prob) + "\n";
    }
    return out;
}

WeightedGraph parse_graph6(const std::string& line, const Rat& default_p) {
    if (line.empty()) throw ParseError(1, "empty graph6 string");
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw ParseError(1, "truncated graph6 string");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 character");
        return c - 63;
    };

    int n = next();
    if (n == 63) throw ParseError(1, "long-form graph6 header not supported (n > 62)");

    WeightedGraph g;
    g.vertex_count = n;
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    int buf = 0, avail = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                buf = next();
                avail = 6;
            }
            --avail;
            if (buf & (1 << avail)) g.add_edge(i, j, default_p);
        }
    }
    (void)bits_needed;
    if (pos != line.size()) throw ParseError(1, "trailing content after graph6 string");
    return g;
}

std::string emit_graph6(const WeightedGraph& g) {
    const int n = g.vertex_count;
    if (n > 62) throw std::invalid_argument("emit_graph6: n > 62 needs the long header form");
    g.validate();

    std::vector<bool> bit(static_cast<size_t>(n) * n, false);
    for (const auto& e : g.edges) {
        int i = std::min(e.u, e.v), j = std::max(e.u, e.v);
        bit[static_cast<size_t>(i) * n + j] = true;
    }

    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int buf = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            buf = (buf << 1) | (bit[static_cast<size_t>(i) * n + j] ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(buf + 63));
                buf = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((buf << (6 - filled)) + 63));
    return out;
}

}  // namespace bunklab
