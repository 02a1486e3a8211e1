#include "graphcohom/coboundary.hpp"

#include <string>

#include "graphcohom/signs.hpp"

namespace graphcohom {

namespace {

enum class SplitKind { in, out };

void check_labels(const VectorGraph& g, int i, int j) {
    const int n = g.size();
    if (n + 1 > kMaxVertices) throw std::invalid_argument("graph too large to blow up");
    if (j < 0 || j > n || i < 0 || i > n || i == j)
        throw std::invalid_argument("blow-up labels i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                    " invalid for n=" + std::to_string(n));
}

int valence(const VectorGraph& h, int v) { return h.out_degree(v) + h.in_degree(v); }

// h = insert_vertex(g, j); vertex i of h is being split.
std::vector<VectorGraph> splits(const VectorGraph& h, int i, int j, SplitKind kind) {
    std::vector<VectorGraph> res;
    if (h.is_isolated(i)) {
        VectorGraph d = h;
        if (kind == SplitKind::in) d.set_arrow(j, i);
        else d.set_arrow(i, j);
        res.push_back(d);
        return res;
    }
    const std::vector<int> fin = h.sources_into(i);
    const int f = static_cast<int>(fin.size());
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
        VectorGraph d = h;
        if (kind == SplitKind::in) {
            d.set_arrow(j, i);
            for (int k = 0; k < f; ++k)
                if (mask >> k & 1u) d.clear_arrow(fin[k]), d.set_arrow(fin[k], j);
        } else {
            bool loop_moves = false;
            if (h.has_out(i)) {
                const int a = h.target(i);
                d.clear_arrow(i);
                if (a != i) d.set_arrow(j, a);
            }
            for (int k = 0; k < f; ++k) {
                if (!(mask >> k & 1u)) continue;
                if (fin[k] == i) {
                    loop_moves = true;
                } else {
                    d.clear_arrow(fin[k]);
                    d.set_arrow(fin[k], j);
                }
            }
            if (h.has_out(i) && h.target(i) == i) d.set_arrow(j, loop_moves ? j : i);
            d.set_arrow(i, j);
        }
        if (std::min(valence(d, i), valence(d, j)) > 1) res.push_back(d);
    }
    return res;
}

int odd_before(const VectorGraph& d, int j) {
    int c = 0;
    for (int v = 0; v < j; ++v) c += d.out_degree(v);
    return c;
}

int parity_sign(int k) { return (k & 1) ? -1 : 1; }

void require_symmetric(const GraphCombination& c, const CoboundaryOptions& opt) {
    if (!opt.allow_nonsymmetric && !is_symmetric(c))
        throw PreconditionError("coboundary: input combination is not symmetric");
}

}  // namespace

std::vector<VectorGraph> proper_splits_in(const VectorGraph& g, int i, int j) {
    check_labels(g, i, j);
    return splits(insert_vertex(g, j), i, j, SplitKind::in);
}

std::vector<VectorGraph> proper_splits_out(const VectorGraph& g, int i, int j) {
    check_labels(g, i, j);
    return splits(insert_vertex(g, j), i, j, SplitKind::out);
}

GraphCombination coboundary_graph(const VectorGraph& g, bool literal_isolated_sign) {
    const int n = g.size();
    if (n + 1 > kMaxVertices) throw std::invalid_argument("graph too large to blow up");
    GraphCombination res(n + 1);
    for (int j = 0; j <= n; ++j) {
        const VectorGraph h = insert_vertex(g, j);
        // |Deb(j)| = 1 in every blow-up, and the other out-degrees are those of h.
        const int eps = parity_sign(odd_before(h, j));
        for (int i = 0; i <= n; ++i) {
            if (i == j) continue;
            const bool flip = h.is_isolated(i) && !literal_isolated_sign;
            const Rational coef = flip ? eps : -eps;
            for (const VectorGraph& d : splits(h, i, j, SplitKind::in)) res.add_term(d, coef);
        }
    }
    return res;
}

GraphCombination coboundary_alt_graph(const VectorGraph& g, bool literal_isolated_sign) {
    const int n = g.size();
    if (n + 1 > kMaxVertices) throw std::invalid_argument("graph too large to blow up");
    GraphCombination res(n + 1);
    for (int i = 0; i < n; ++i) {
        const int deb = g.out_degree(i);
        for (int j = i + 1; j <= n; ++j) {
            const VectorGraph h = insert_vertex(g, j);
            const int flip = h.is_isolated(i) && !literal_isolated_sign ? -1 : 1;

            const int eps_j_in = parity_sign(odd_before(h, j));
            for (const VectorGraph& d : splits(h, i, j, SplitKind::in)) res.add_term(d, -flip * eps_j_in);

            // In Δ'_{ij}: i carries the new arrow, j inherits |Deb(i)|.
            const auto out = splits(h, i, j, SplitKind::out);
            if (out.empty()) continue;
            const VectorGraph& d0 = out.front();
            const int eps_i = parity_sign(odd_before(d0, i));
            const int eps_j = parity_sign(odd_before(d0, j));
            const int coef = (1 - deb) * eps_i - deb * eps_j;
            for (const VectorGraph& d : out) res.add_term(d, -flip * coef);
        }
    }
    return res;
}

GraphCombination coboundary(const GraphCombination& c, const CoboundaryOptions& opt) {
    require_symmetric(c, opt);
    GraphCombination res(c.vertex_count() < 0 ? -1 : c.vertex_count() + 1);
    for (const auto& [g, q] : c.terms()) {
        GraphCombination t = coboundary_graph(g, opt.literal_isolated_sign);
        t *= q;
        res += t;
    }
    return res;
}

GraphCombination coboundary_alt(const GraphCombination& c, const CoboundaryOptions& opt) {
    require_symmetric(c, opt);
    GraphCombination res(c.vertex_count() < 0 ? -1 : c.vertex_count() + 1);
    for (const auto& [g, q] : c.terms()) {
        GraphCombination t = coboundary_alt_graph(g, opt.literal_isolated_sign);
        t *= q;
        res += t;
    }
    return res;
}

CanonicalCombination coboundary(const CanonicalCombination& c, bool literal_isolated_sign) {
    CanonicalCombination res(c.vertex_count() < 0 ? -1 : c.vertex_count() + 1);
    CanonicalCache cache;
    for (const auto& [k, q] : c.terms()) {
        const GraphCombination dk = coboundary_graph(k, literal_isolated_sign);
        for (const auto& [d, a] : dk.terms()) res.insert(cache.get(d), q * a);
    }
    return res;
}

std::optional<VectorGraph> homotopy(const VectorGraph& g) {
    const int n = g.size();
    int i0 = -1;
    for (int v = n - 1; v >= 0 && i0 < 0; --v)
        if (g.out_degree(v) == 1 && g.in_degree(v) == 1) i0 = v;
    if (i0 < 0) return std::nullopt;

    VectorGraph h = g;
    const int a = g.target(i0);
    h.clear_arrow(i0);
    if (a != i0) {
        const int b = g.sources_into(i0).front();
        h.clear_arrow(b);
        h.set_arrow(b, a);
    }
    return remove_isolated_vertex(h, i0);
}

GraphCombination homotopy(const GraphCombination& c) {
    GraphCombination res;
    for (const auto& [g, q] : c.terms())
        if (auto h = homotopy(g)) res.add_term(*h, q);
    return res;
}

}  // namespace graphcohom
