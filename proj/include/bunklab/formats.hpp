#ifndef BUNKLAB_FORMATS_HPP
#define BUNKLAB_FORMATS_HPP

#include <stdexcept>
#include <string>

#include "bunklab/graph.hpp"

namespace bunklab {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Line-oriented edge list: first line "n m", then m lines "u v p" where p is
// a rational ("1/2", "349/10000") or decimal ("0.0349", parsed exactly).
WeightedGraph parse_edge_list(const std::string& text);

// Canonical emission: edges sorted by (min endpoint, max endpoint, insertion
// index), probabilities in lowest terms, LF line endings.
std::string emit_edge_list(const WeightedGraph& g);

// graph6, short header form (n <= 62). All edges get open_prob = default_p.
WeightedGraph parse_graph6(const std::string& line, const Rat& default_p = make_rat(1, 2));

// Short-form graph6; parallel edges collapse, weights are dropped.
// Throws std::invalid_argument for n > 62.
std::string emit_graph6(const WeightedGraph& g);

}  // namespace bunklab

#endif
