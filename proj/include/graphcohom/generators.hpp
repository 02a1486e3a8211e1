#ifndef GRAPHCOHOM_GENERATORS_HPP
#define GRAPHCOHOM_GENERATORS_HPP

#include <string>
#include <vector>

#include "graphcohom/combination.hpp"
#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

// 0 -> 1 -> ... -> k-1 -> 0; wheel(1) is a loop.
VectorGraph wheel(int k);
// l -> l-1 -> ... -> 0; line(0) is a single vertex.
VectorGraph line(int l);

// Product of lines and wheels. Even line lengths may repeat; odd line lengths and
// wheel lengths are sets (a repeat symmetrizes to zero).
struct MonomialSpec {
    std::vector<int> even_lines;
    std::vector<int> odd_lines;
    std::vector<int> wheels;

    int vertex_count() const;
    bool has_duplicate_odd() const;
    bool operator==(const MonomialSpec&) const = default;
};

// {"even_lines":[0,2],"odd_lines":[1],"wheels":[3]}; missing keys are empty.
MonomialSpec parse_monomial_spec(const std::string& json);
std::string format_monomial_spec(const MonomialSpec& s);

// Components in the fixed arrangement: even lines ascending, odd lines
// ascending, wheels ascending.
VectorGraph monomial_graph(const MonomialSpec& s);
// Same arrangement, but odd line `first_odd` is placed before the other odd lines.
VectorGraph monomial_graph(const MonomialSpec& s, int first_odd);

// S(monomial_graph(s)), unnormalized.
GraphCombination sym_generator(const MonomialSpec& s);
// Orbit-normalized: coefficient +1 on monomial_graph(s) itself.
GraphCombination orbit_generator(const MonomialSpec& s);
// Class of sym_generator(s) in the orbit basis (no n! expansion).
CanonicalCombination sym_generator_canonical(const MonomialSpec& s);

// Partitions of n into pairwise distinct odd parts, parts ascending,
// partitions in lexicographic order.
std::vector<std::vector<int>> distinct_odd_partitions(int n, bool include_one);

// Wheel products, one per partition.
std::vector<MonomialSpec> predicted_specs(int n, bool include_one);
std::vector<GraphCombination> predicted_basis(int n, bool include_one);

// Right-hand side of the line-monomial coboundary formula, on orbit classes:
// Σ_r k_r · [ (Π_{i≠r} L_{2i}^{k_i}) L_{2r}^{k_r-1} L_{2r+1} ∧ (∧_j L_{2ℓ_j+1}) ].
CanonicalCombination line_monomial_image(const MonomialSpec& s);
// "k_i ≠ 0 implies 2i+1 is one of the odd lines".
bool line_monomial_predicts_cocycle(const MonomialSpec& s);

}  // namespace graphcohom

#endif
