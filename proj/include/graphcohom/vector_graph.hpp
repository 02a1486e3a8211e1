#ifndef GRAPHCOHOM_VECTOR_GRAPH_HPP
#define GRAPHCOHOM_VECTOR_GRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace graphcohom {

// Hard capacity of the fixed-size adjacency storage. The ∂ operator adds one
// vertex, so graphs of up to kMaxVertices - 1 vertices can be differentiated.
inline constexpr int kMaxVertices = 12;

struct Arrow {
    int from;
    int to;
    auto operator<=>(const Arrow&) const = default;
};

// Aerial vector graph: vertices 0..n-1, each with at most one outgoing arrow.
// Loops are allowed. Multiple arrows are impossible by construction.
class VectorGraph {
public:
    static constexpr std::int8_t kNoArrow = -1;

    VectorGraph() { out_.fill(kNoArrow); }
    explicit VectorGraph(int n);
    VectorGraph(int n, std::initializer_list<Arrow> arrows);
    VectorGraph(int n, const std::vector<Arrow>& arrows);

    int size() const { return n_; }

    bool has_out(int v) const { return out_[check(v)] != kNoArrow; }
    // Target of the outgoing arrow of v, or -1.
    int target(int v) const { return out_[check(v)]; }

    void set_arrow(int from, int to);
    void clear_arrow(int from);

    int in_degree(int v) const;
    int out_degree(int v) const { return has_out(v) ? 1 : 0; }
    // Sources of the arrows ending at v (loops included), ascending.
    std::vector<int> sources_into(int v) const;
    bool is_isolated(int v) const { return !has_out(v) && in_degree(v) == 0; }

    int arrow_count() const;
    // Arrows sorted by source; this is the comparison encoding for canonical forms.
    std::vector<Arrow> arrows() const;

    // |Deb(i)| mod 2 per vertex.
    std::vector<std::uint8_t> out_parities() const;

    // Lexicographic comparison of the sorted arrow lists.
    static std::strong_ordering compare_encoding(const VectorGraph& a, const VectorGraph& b);

    std::size_t hash() const;

    auto operator<=>(const VectorGraph&) const = default;
    bool operator==(const VectorGraph&) const = default;

private:
    int check(int v) const;

    std::uint8_t n_ = 0;
    std::array<std::int8_t, kMaxVertices> out_{};
};

struct VectorGraphHash {
    std::size_t operator()(const VectorGraph& g) const { return g.hash(); }
};

// New graph on n+1 vertices: old vertex v gets label v + (v >= j); j is isolated.
VectorGraph insert_vertex(const VectorGraph& g, int j);

// Removes vertex v; must have no incident arrows. Remaining labels keep their order.
VectorGraph remove_isolated_vertex(const VectorGraph& g, int v);

// Disjoint union; labels of b are shifted by a.size().
VectorGraph wedge_union(const VectorGraph& a, const VectorGraph& b);

// Vertex sets of the weakly connected components, each ascending, ordered by
// smallest vertex.
std::vector<std::vector<int>> connected_components(const VectorGraph& g);

struct ComponentShape {
    enum class Kind { wheel, line, other };
    Kind kind;
    int length;  // cycle length for wheels, arrow count for lines, 0 otherwise

    bool operator==(const ComponentShape&) const = default;
};

ComponentShape classify_component(const VectorGraph& g, const std::vector<int>& component);

}  // namespace graphcohom

#endif
