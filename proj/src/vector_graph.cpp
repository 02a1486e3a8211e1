#include "graphcohom/vector_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphcohom {

VectorGraph::VectorGraph(int n) : VectorGraph() {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    n_ = static_cast<std::uint8_t>(n);
}

VectorGraph::VectorGraph(int n, std::initializer_list<Arrow> arrows) : VectorGraph(n) {
    for (const Arrow& a : arrows) set_arrow(a.from, a.to);
}

VectorGraph::VectorGraph(int n, const std::vector<Arrow>& arrows) : VectorGraph(n) {
    for (const Arrow& a : arrows) set_arrow(a.from, a.to);
}

int VectorGraph::check(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of size " +
                                std::to_string(n_));
    return v;
}

void VectorGraph::set_arrow(int from, int to) {
    check(from);
    check(to);
    if (out_[from] != kNoArrow)
        throw std::invalid_argument("vertex " + std::to_string(from) + " already has an outgoing arrow");
    out_[from] = static_cast<std::int8_t>(to);
}

void VectorGraph::clear_arrow(int from) { out_[check(from)] = kNoArrow; }

int VectorGraph::in_degree(int v) const {
    check(v);
    int d = 0;
    for (int s = 0; s < n_; ++s)
        if (out_[s] == v) ++d;
    return d;
}

std::vector<int> VectorGraph::sources_into(int v) const {
    check(v);
    std::vector<int> res;
    for (int s = 0; s < n_; ++s)
        if (out_[s] == v) res.push_back(s);
    return res;
}

int VectorGraph::arrow_count() const {
    int c = 0;
    for (int s = 0; s < n_; ++s)
        if (out_[s] != kNoArrow) ++c;
    return c;
}

std::vector<Arrow> VectorGraph::arrows() const {
    std::vector<Arrow> res;
    for (int s = 0; s < n_; ++s)
        if (out_[s] != kNoArrow) res.push_back({s, out_[s]});
    return res;
}

std::vector<std::uint8_t> VectorGraph::out_parities() const {
    std::vector<std::uint8_t> p(n_);
    for (int s = 0; s < n_; ++s) p[s] = out_[s] != kNoArrow ? 1 : 0;
    return p;
}

std::strong_ordering VectorGraph::compare_encoding(const VectorGraph& a, const VectorGraph& b) {
    auto ea = a.arrows();
    auto eb = b.arrows();
    if (auto c = std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
        c != 0)
        return c;
    return a.n_ <=> b.n_;
}

std::size_t VectorGraph::hash() const {
    std::uint64_t h = 1469598103934665603ull ^ n_;
    for (int s = 0; s < n_; ++s) {
        h ^= static_cast<std::uint8_t>(out_[s]);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

VectorGraph insert_vertex(const VectorGraph& g, int j) {
    const int n = g.size();
    if (j < 0 || j > n) throw std::out_of_range("insert_vertex: label out of range");
    auto shift = [j](int v) { return v + (v >= j ? 1 : 0); };
    VectorGraph res(n + 1);
    for (int v = 0; v < n; ++v)
        if (g.has_out(v)) res.set_arrow(shift(v), shift(g.target(v)));
    return res;
}

VectorGraph remove_isolated_vertex(const VectorGraph& g, int v) {
    if (!g.is_isolated(v)) throw std::invalid_argument("remove_isolated_vertex: vertex has arrows");
    auto shift = [v](int u) { return u - (u > v ? 1 : 0); };
    VectorGraph res(g.size() - 1);
    for (int u = 0; u < g.size(); ++u)
        if (u != v && g.has_out(u)) res.set_arrow(shift(u), shift(g.target(u)));
    return res;
}

VectorGraph wedge_union(const VectorGraph& a, const VectorGraph& b) {
    VectorGraph res(a.size() + b.size());
    for (int v = 0; v < a.size(); ++v)
        if (a.has_out(v)) res.set_arrow(v, a.target(v));
    for (int v = 0; v < b.size(); ++v)
        if (b.has_out(v)) res.set_arrow(v + a.size(), b.target(v) + a.size());
    return res;
}

std::vector<std::vector<int>> connected_components(const VectorGraph& g) {
    const int n = g.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int v = 0; v < n; ++v)
        if (g.has_out(v)) parent[find(v)] = find(g.target(v));
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[slot[r]].push_back(v);
    }
    return comps;
}

ComponentShape classify_component(const VectorGraph& g, const std::vector<int>& component) {
    if (component.empty()) throw std::invalid_argument("classify_component: empty vertex set");
    std::vector<bool> in(g.size(), false);
    for (int v : component) {
        if (v < 0 || v >= g.size()) throw std::out_of_range("classify_component: vertex out of range");
        in[v] = true;
    }

    // Connectivity check restricted to the component, arrows viewed undirected.
    std::vector<int> stack{component.front()};
    std::vector<bool> seen(g.size(), false);
    seen[component.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < g.size(); ++u) {
            bool adj = (g.target(v) == u) || (g.target(u) == v);
            if (adj && !seen[u]) {
                if (!in[u]) throw std::invalid_argument("classify_component: set is not a full component");
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != component.size())
        throw std::invalid_argument("classify_component: vertex set is not connected");

    const int k = static_cast<int>(component.size());
    int arrows = 0;
    int sinks = 0;
    bool max_in_one = true;
    for (int v : component) {
        if (g.has_out(v)) ++arrows;
        else ++sinks;
        if (g.in_degree(v) > 1) max_in_one = false;
    }
    // Every vertex has out-degree <= 1; a connected component with k arrows on
    // k vertices and all in-degrees <= 1 is a directed cycle.
    if (arrows == k && max_in_one) return {ComponentShape::Kind::wheel, k};
    // k-1 arrows, one sink, in-degrees <= 1: a directed path ending at the sink.
    if (arrows == k - 1 && sinks == 1 && max_in_one) return {ComponentShape::Kind::line, k - 1};
    return {ComponentShape::Kind::other, 0};
}

}  // namespace graphcohom
