#ifndef GRAPHCOHOM_TEXT_FORMAT_HPP
#define GRAPHCOHOM_TEXT_FORMAT_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graphcohom/combination.hpp"
#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// `graph n=3; edges = 1->2, 2->3, 3->1` (1-based); `graph n=2` when edgeless.
std::string format_graph(const VectorGraph& g);
VectorGraph parse_graph(std::string_view text);

// `p/q` or an integer, canonicalized.
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

// One `<rational> * <graph-literal>` per line, sorted by graph encoding. Blank
// lines and lines starting with '#' are ignored when parsing.
std::string format_combination(const GraphCombination& c);
GraphCombination parse_combination(std::string_view text);
GraphCombination read_combination(std::istream& in);

}  // namespace graphcohom

#endif
