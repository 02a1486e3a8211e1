#ifndef GRAPHCOHOM_COBOUNDARY_HPP
#define GRAPHCOHOM_COBOUNDARY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "graphcohom/combination.hpp"
#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoboundaryOptions {
    // Apply the graph-wise formula to non-symmetric input instead of throwing.
    bool allow_nonsymmetric = false;
    // Blow-ups of an isolated vertex enter with the same -ε as every other
    // blow-up. Off by default: with that sign, ∂ disagrees with the Chevalley
    // coboundary of the associated operators (see README).
    bool literal_isolated_sign = false;
};

// Blow-ups of vertex i into j -> i. `g` has n vertices, j ∈ [0, n] is the new
// vertex, i ≠ j is the label (in the n+1 labeling) of the vertex being split.
// Each admissible subset A of arrows into i is moved onto j.
std::vector<VectorGraph> proper_splits_in(const VectorGraph& g, int i, int j);

// Blow-ups into i -> j: the old outgoing arrow of i now leaves j.
std::vector<VectorGraph> proper_splits_out(const VectorGraph& g, int i, int j);

// ∂Δ on a single labeled graph (n+1 vertices in the result).
GraphCombination coboundary_graph(const VectorGraph& g, bool literal_isolated_sign = false);

// Grouped i < j variant of the same operator.
GraphCombination coboundary_alt_graph(const VectorGraph& g, bool literal_isolated_sign = false);

// Linear extensions. Throw PreconditionError on non-symmetric input unless allowed.
GraphCombination coboundary(const GraphCombination& c, const CoboundaryOptions& opt = {});
GraphCombination coboundary_alt(const GraphCombination& c, const CoboundaryOptions& opt = {});

// ∂ on orbit classes: Σ_K c_K · collapse(∂K). Agrees with collapse ∘ ∂ ∘ expand.
CanonicalCombination coboundary(const CanonicalCombination& c, bool literal_isolated_sign = false);

// Contraction of the arrow leaving the largest vertex of order 1^+; nullopt when
// there is none. A vertex carrying only a loop is deleted.
std::optional<VectorGraph> homotopy(const VectorGraph& g);
GraphCombination homotopy(const GraphCombination& c);

}  // namespace graphcohom

#endif
