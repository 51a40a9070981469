#ifndef BUNKLAB_GRAPH_HPP
#define BUNKLAB_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bunklab/rational.hpp"

namespace bunklab {

// Finite multigraph with a per-edge open probability (exact rational).
// Vertices are dense 0-based indices; human-readable names live in `labels`.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    Rat open_prob;
};

struct WeightedGraph {
    int vertex_count = 0;
    std::vector<WeightedEdge> edges;
    std::map<int, std::string> labels;

    void add_edge(int u, int v, Rat p);
    int edge_count() const { return static_cast<int>(edges.size()); }

    // Checks endpoint ranges, no self-loops, probabilities in [0,1].
    // Throws std::invalid_argument on violation.
    void validate() const;

    bool same_structure(const WeightedGraph& other) const;
};

// Base graph + transversal set + pole pair: one bunkbed question.
struct BunkbedInstance {
    WeightedGraph base;
    std::set<int> transversal;
    int pole_u = 0;
    int pole_v = 0;

    void validate() const;
};

// 3-uniform hypergraph where each hyperedge carries one marked transversal
// apex. `b` and `c` are the two non-transversal vertices, in stored order.
struct Hyperedge3 {
    int apex = 0;
    int b = 0;
    int c = 0;
};

struct Hypergraph3 {
    int vertex_count = 0;
    std::vector<Hyperedge3> hyperedges;
    std::set<int> transversal;

    int hyperedge_count() const { return static_cast<int>(hyperedges.size()); }

    // Enforces distinct hyperedge vertices and the one-apex-per-hyperedge
    // shape (apex transversal, b and c not).
    void validate() const;
};

// A fan gadget with its three boundary vertices.
struct GadgetHandle {
    WeightedGraph graph;
    int terminal_a = 0;
    int terminal_b = 0;
    int terminal_c = 0;
};

// Fan graph on n+1 vertices: apex a (index 0) and path v_1..v_n (indices
// 1..n). Path edges (v_i, v_{i+1}) open with probability p; spokes (a, v_k)
// open with probability 1-p. Edge order: path edges first, then spokes.
GadgetHandle build_gadget(int n, const Rat& p);

// The 10-vertex, six-hyperedge witness hypergraph with transversal
// {u2, u7, u9}; vertex i holds label "u{i+1}".
Hypergraph3 build_hollom();

// Replaces every hyperedge of `h` by a fresh copy of the fan gadget,
// identifying terminal a with the apex and terminals b/c with the
// hyperedge's b/c. Requires n >= 2 so the two path terminals are distinct.
// Poles default to vertices 0 and vertex_count-1 of `h`.
BunkbedInstance substitute_gadgets(const Hypergraph3& h, int n, const Rat& p);
BunkbedInstance substitute_gadgets(const Hypergraph3& h, int n, const Rat& p,
                                   int pole_u, int pole_v);

// Two copies of the base plus always-open posts at transversal vertices.
// Level-0 vertex v keeps index v; level-1 copy is v + base.vertex_count.
// Edge order: level-0 edges, level-1 edges, posts (ascending transversal).
WeightedGraph build_bunkbed_graph(const BunkbedInstance& b);

// The clone extension of substitute_gadgets(build_hollom(), 1204, 1/2):
// each transversal vertex receives k-1 extra clones, each wired to the two
// lowest-indexed spoke endpoints in each of the vertex's two incident
// gadgets (4 neighbors total), every clone edge open with probability 1/2.
// Adds 3(k-1) vertices and 12(k-1) edges.
WeightedGraph build_complete_clone_instance(int k);

// Single-hyperedge hypergraph {s, a, t} with T = {a}: vertices s=0, a=1,
// t=2, one hyperedge (apex=1, b=0, c=2). Test/reduction-oracle workhorse.
Hypergraph3 build_single_hyperedge();

}  // namespace bunklab

#endif
