#ifndef GRAPHCOHOM_ORDER_HPP
#define GRAPHCOHOM_ORDER_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "graphcohom/combination.hpp"
#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

// The six vertex classes, keyed by (|Fin(i)|, |Deb(i)|). A loop counts in both.
struct VertexClass {
    enum class Kind { r, r_plus, one_plus, one, zero, zero_minus };
    Kind kind;
    int r = 0;  // |Fin(i)| for r and r_plus

    // r > r'^+ > 1^+ > 1 > 0 > 0^-; r-symbols compare by r.
    std::strong_ordering operator<=>(const VertexClass& o) const;
    bool operator==(const VertexClass& o) const { return (*this <=> o) == 0; }

    std::string str() const;
};

VertexClass vertex_class(const VectorGraph& g, int i);

using OrderWord = std::vector<VertexClass>;

OrderWord graph_order(const VectorGraph& g);
// Lexicographic; throws std::invalid_argument on length mismatch.
std::strong_ordering compare_order(const OrderWord& a, const OrderWord& b);
// "[1+,1+,0-]"
std::string format_order(const OrderWord& w);
// O ⊕ 1^+: the descending rearrangement of O with one 1^+ inserted.
OrderWord order_plus_one_plus(const OrderWord& w);

// σ_δ: the terms of c of maximal order, together with that order.
std::pair<GraphCombination, OrderWord> symbol(const GraphCombination& c);
// Terms of c whose order equals w exactly.
GraphCombination restrict_to_order(const GraphCombination& c, const OrderWord& w);

// The symbol/homotopy relation for a symmetric δ:
//   h(σ_∂δ) = σ_{∂h(σ_δ)} + λ·σ_δ,   λ = -ε·(Σ_{r} r + Σ_{r^+} (r-1)),
// where ε = (-1)^{#r^+ + #1^+} in O(δ) and σ_{∂h(σ_δ)} keeps the terms of order
// O(δ). `hypothesis` records whether O(∂δ) = O(δ) ⊕ 1^+.
struct HomotopyIdentityCheck {
    bool hypothesis = false;
    bool holds = false;
    Rational predicted;
    GraphCombination defect;  // lhs - rhs with the predicted λ
};

HomotopyIdentityCheck check_homotopy_identity(const GraphCombination& delta);

// O'(Δ) for graphs made of lines and wheels: line lengths descending, then wheel
// lengths descending. Every line entry outranks every wheel entry.
struct LineWheelOrder {
    std::vector<int> lines;
    std::vector<int> wheels;

    std::strong_ordering operator<=>(const LineWheelOrder& o) const;
    bool operator==(const LineWheelOrder& o) const = default;
};

// Throws PreconditionError if some component is neither a line nor a wheel.
LineWheelOrder line_wheel_order(const VectorGraph& g);

}  // namespace graphcohom

#endif
