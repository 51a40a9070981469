#include "bunklab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bunklab {

void WeightedGraph::add_edge(int u, int v, Rat p) {
    edges.push_back(WeightedEdge{u, v, std::move(p)});
}

void WeightedGraph::validate() const {
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw std::invalid_argument("edge " + std::to_string(i) + ": endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("edge " + std::to_string(i) + ": self-loop");
        if (!is_probability(e.open_prob))
            throw std::invalid_argument("edge " + std::to_string(i) + ": open_prob outside [0,1]");
    }
}

bool WeightedGraph::same_structure(const WeightedGraph& other) const {
    if (vertex_count != other.vertex_count || edges.size() != other.edges.size()) return false;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u != other.edges[i].u || edges[i].v != other.edges[i].v ||
            edges[i].open_prob != other.edges[i].open_prob)
            return false;
    }
    return true;
}

void BunkbedInstance::validate() const {
    base.validate();
    for (int w : transversal)
        if (w < 0 || w >= base.vertex_count)
            throw std::invalid_argument("transversal vertex out of range");
    if (pole_u < 0 || pole_u >= base.vertex_count || pole_v < 0 || pole_v >= base.vertex_count)
        throw std::invalid_argument("pole out of range");
}

void Hypergraph3::validate() const {
    for (size_t i = 0; i < hyperedges.size(); ++i) {
        const auto& e = hyperedges[i];
        for (int v : {e.apex, e.b, e.c})
            if (v < 0 || v >= vertex_count)
                throw std::invalid_argument("hyperedge " + std::to_string(i) + ": vertex out of range");
        if (e.apex == e.b || e.apex == e.c || e.b == e.c)
            throw std::invalid_argument("hyperedge " + std::to_string(i) + ": vertices not distinct");
        if (!transversal.count(e.apex) || transversal.count(e.b) || transversal.count(e.c))
            throw std::invalid_argument("hyperedge " + std::to_string(i) +
                                        ": apex must be the unique transversal vertex");
    }
    for (int w : transversal)
        if (w < 0 || w >= vertex_count)
            throw std::invalid_argument("transversal vertex out of range");
}

GadgetHandle build_gadget(int n, const Rat& p) {
    if (n < 1) throw std::invalid_argument("build_gadget: n >= 1 required");
    if (!(p > 0 && p < 1)) throw std::invalid_argument("build_gadget: p in (0,1) required");
    GadgetHandle g;
    g.graph.vertex_count = n + 1;
    Rat spoke = 1 - p;
    for (int i = 1; i < n; ++i) g.graph.add_edge(i, i + 1, p);
    for (int k = 1; k <= n; ++k) g.graph.add_edge(0, k, spoke);
    g.terminal_a = 0;
    g.terminal_b = 1;
    g.terminal_c = n;
    return g;
}

Hypergraph3 build_hollom() {
    Hypergraph3 h;
    h.vertex_count = 10;
    // Hyperedges listed in red-path order; the apex is the unique
    // transversal member of each triple.
    //              apex  b  c           (1-based names)
    h.hyperedges = {
        {1, 0, 2},  // (u1,u2,u3), apex u2
        {8, 2, 5},  // (u3,u6,u9), apex u9
        {6, 4, 5},  // (u5,u6,u7), apex u7
        {1, 3, 4},  // (u2,u4,u5), apex u2
        {6, 3, 7},  // (u4,u7,u8), apex u7
        {8, 7, 9},  // (u8,u9,u10), apex u9
    };
    h.transversal = {1, 6, 8};
    return h;
}

Hypergraph3 build_single_hyperedge() {
    Hypergraph3 h;
    h.vertex_count = 3;
    h.hyperedges = {{1, 0, 2}};
    h.transversal = {1};
    return h;
}

BunkbedInstance substitute_gadgets(const Hypergraph3& h, int n, const Rat& p) {
    return substitute_gadgets(h, n, p, 0, h.vertex_count - 1);
}

BunkbedInstance substitute_gadgets(const Hypergraph3& h, int n, const Rat& p,
                                   int pole_u, int pole_v) {
    if (n < 2) throw std::invalid_argument("substitute_gadgets: n >= 2 required (terminals must be distinct)");
    h.validate();
    GadgetHandle proto = build_gadget(n, p);

    BunkbedInstance out;
    out.base.vertex_count = h.vertex_count;
    out.transversal = h.transversal;
    out.pole_u = pole_u;
    out.pole_v = pole_v;

    for (const auto& he : h.hyperedges) {
        // Gadget vertex -> assembled vertex. a=0 -> apex, v_1 -> b, v_n -> c,
        // interior v_2..v_{n-1} are fresh.
        std::vector<int> map(n + 1);
        map[proto.terminal_a] = he.apex;
        map[proto.terminal_b] = he.b;
        map[proto.terminal_c] = he.c;
        for (int k = 2; k < n; ++k) map[k] = out.base.vertex_count++;
        for (const auto& e : proto.graph.edges) out.base.add_edge(map[e.u], map[e.v], e.open_prob);
    }
    // Carry the hypergraph's natural labels when it is the standard witness.
    if (h.vertex_count == 10) {
        for (int i = 0; i < 10; ++i) out.base.labels[i] = "u" + std::to_string(i + 1);
    }
    return out;
}

WeightedGraph build_bunkbed_graph(const BunkbedInstance& b) {
    b.validate();
    const int nv = b.base.vertex_count;
    WeightedGraph g;
    g.vertex_count = 2 * nv;
    for (const auto& e : b.base.edges) g.add_edge(e.u, e.v, e.open_prob);
    for (const auto& e : b.base.edges) g.add_edge(e.u + nv, e.v + nv, e.open_prob);
    for (int w : b.transversal) g.add_edge(w, w + nv, Rat(1));
    return g;
}

WeightedGraph build_complete_clone_instance(int k) {
    if (k < 1) throw std::invalid_argument("build_complete_clone_instance: k >= 1 required");
    Rat half = make_rat(1, 2);
    Hypergraph3 h = build_hollom();
    BunkbedInstance inst = substitute_gadgets(h, 1204, half);
    WeightedGraph g = std::move(inst.base);

    // For each transversal vertex, collect the two lowest-indexed spoke
    // endpoints per incident gadget (the spokes are exactly the edges at the
    // apex). Hyperedge order fixes which gadget comes first.
    for (int w : h.transversal) {
        std::vector<int> neighbors;
        for (size_t ei = 0; ei < h.hyperedges.size() && neighbors.size() < 4; ++ei) {
            if (h.hyperedges[ei].apex != w) continue;
            std::vector<int> spoke_ends;
            // Edges of gadget ei occupy a contiguous block of 2n-1 edges.
            const int per_gadget = 2 * 1204 - 1;
            for (int j = 0; j < per_gadget; ++j) {
                const auto& e = g.edges[ei * per_gadget + j];
                if (e.u == w)
                    spoke_ends.push_back(e.v);
                else if (e.v == w)
                    spoke_ends.push_back(e.u);
            }
            std::sort(spoke_ends.begin(), spoke_ends.end());
            neighbors.push_back(spoke_ends[0]);
            neighbors.push_back(spoke_ends[1]);
        }
        for (int clone = 1; clone < k; ++clone) {
            int cv = g.vertex_count++;
            for (int nb : neighbors) g.add_edge(cv, nb, half);
        }
    }
    return g;
}

}  // namespace bunklab
