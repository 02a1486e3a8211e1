#include "graphcohom/order.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "graphcohom/coboundary.hpp"

namespace graphcohom {

namespace {

int rank_of(VertexClass::Kind k) {
    switch (k) {
        case VertexClass::Kind::r: return 5;
        case VertexClass::Kind::r_plus: return 4;
        case VertexClass::Kind::one_plus: return 3;
        case VertexClass::Kind::one: return 2;
        case VertexClass::Kind::zero: return 1;
        case VertexClass::Kind::zero_minus: return 0;
    }
    return -1;
}

}  // namespace

std::strong_ordering VertexClass::operator<=>(const VertexClass& o) const {
    if (auto c = rank_of(kind) <=> rank_of(o.kind); c != 0) return c;
    return r <=> o.r;
}

std::string VertexClass::str() const {
    switch (kind) {
        case Kind::r: return std::to_string(r);
        case Kind::r_plus: return std::to_string(r) + "+";
        case Kind::one_plus: return "1+";
        case Kind::one: return "1";
        case Kind::zero: return "0";
        case Kind::zero_minus: return "0-";
    }
    return "?";
}

VertexClass vertex_class(const VectorGraph& g, int i) {
    const int fin = g.in_degree(i);
    const bool deb = g.has_out(i);
    using K = VertexClass::Kind;
    if (fin > 1) return {deb ? K::r_plus : K::r, fin};
    if (fin == 1) return {deb ? K::one_plus : K::one, 0};
    return {deb ? K::zero_minus : K::zero, 0};
}

OrderWord graph_order(const VectorGraph& g) {
    OrderWord w;
    w.reserve(g.size());
    for (int i = 0; i < g.size(); ++i) w.push_back(vertex_class(g, i));
    return w;
}

std::strong_ordering compare_order(const OrderWord& a, const OrderWord& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compare_order: words of different lengths");
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_order(const OrderWord& w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + w[k].str();
    return s + "]";
}

OrderWord order_plus_one_plus(const OrderWord& w) {
    OrderWord res = w;
    res.push_back({VertexClass::Kind::one_plus, 0});
    std::sort(res.begin(), res.end(), std::greater<>());
    return res;
}

std::pair<GraphCombination, OrderWord> symbol(const GraphCombination& c) {
    if (c.is_zero()) throw std::invalid_argument("symbol of the zero combination");
    OrderWord best;
    bool have = false;
    for (const auto& [g, q] : c.terms()) {
        OrderWord w = graph_order(g);
        if (!have || compare_order(w, best) > 0) best = std::move(w), have = true;
    }
    return {restrict_to_order(c, best), best};
}

GraphCombination restrict_to_order(const GraphCombination& c, const OrderWord& w) {
    GraphCombination res(c.vertex_count());
    for (const auto& [g, q] : c.terms())
        if (static_cast<std::size_t>(g.size()) == w.size() && graph_order(g) == w) res.add_term(g, q);
    return res;
}

HomotopyIdentityCheck check_homotopy_identity(const GraphCombination& delta) {
    HomotopyIdentityCheck res;
    if (delta.is_zero()) throw std::invalid_argument("check_homotopy_identity: zero combination");
    const auto [sigma, w] = symbol(delta);
    const OrderWord top = order_plus_one_plus(w);
    const GraphCombination dd = coboundary(delta);
    res.hypothesis = !dd.is_zero() && compare_order(symbol(dd).second, top) == 0;

    long weight = 0;
    int odd = 0;
    for (const VertexClass& c : w) {
        if (c.kind == VertexClass::Kind::r) weight += c.r;
        if (c.kind == VertexClass::Kind::r_plus) weight += c.r - 1, ++odd;
        if (c.kind == VertexClass::Kind::one_plus) ++odd;
    }
    res.predicted = (odd % 2 ? 1 : -1) * weight;

    CoboundaryOptions loose;
    loose.allow_nonsymmetric = true;
    const GraphCombination hs = homotopy(sigma);
    GraphCombination rhs = res.predicted * sigma;
    if (!hs.is_zero()) rhs += restrict_to_order(coboundary(hs, loose), w);
    res.defect = homotopy(restrict_to_order(dd, top)) - rhs;
    res.holds = res.defect.is_zero();
    return res;
}

std::strong_ordering LineWheelOrder::operator<=>(const LineWheelOrder& o) const {
    // Flatten to (tier, length) with lines on the higher tier.
    auto flat = [](const LineWheelOrder& x) {
        std::vector<std::pair<int, int>> v;
        for (int l : x.lines) v.emplace_back(1, l);
        for (int r : x.wheels) v.emplace_back(0, r);
        return v;
    };
    const auto a = flat(*this);
    const auto b = flat(o);
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

LineWheelOrder line_wheel_order(const VectorGraph& g) {
    LineWheelOrder o;
    for (const auto& comp : connected_components(g)) {
        const ComponentShape s = classify_component(g, comp);
        if (s.kind == ComponentShape::Kind::line) o.lines.push_back(s.length);
        else if (s.kind == ComponentShape::Kind::wheel) o.wheels.push_back(s.length);
        else throw PreconditionError("line_wheel_order: component is neither a line nor a wheel");
    }
    std::sort(o.lines.rbegin(), o.lines.rend());
    std::sort(o.wheels.rbegin(), o.wheels.rend());
    return o;
}

}  // namespace graphcohom
