#include "graphcohom/canonical.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <vector>

namespace graphcohom {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

CanonicalForm canonicalize_bruteforce(const VectorGraph& g) {
    const int n = g.size();
    const DegreeVector d = DegreeVector::of(g);
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);

    CanonicalForm best;
    bool have = false;
    bool seen_plus = false;
    bool seen_minus = false;
    do {
        Permutation sigma(im);
        VectorGraph h = permute(g, sigma);
        int s = relabel_sign(sigma, d);
        auto c = have ? VectorGraph::compare_encoding(h, best.graph) : std::strong_ordering::less;
        if (c < 0) {
            best.graph = h;
            best.sign = s;
            best.automorphisms = 1;
            seen_plus = s > 0;
            seen_minus = s < 0;
            have = true;
        } else if (c == 0) {
            ++best.automorphisms;
            (s > 0 ? seen_plus : seen_minus) = true;
        }
    } while (std::next_permutation(im.begin(), im.end()));
    best.sign_zero = seen_plus && seen_minus;
    return best;
}

namespace {

// Partial labeling explored by the pruned search. Labels are handed out in
// increasing order; the vertex holding label k either was reached earlier as a
// target or is chosen fresh among the unlabeled out-vertices. An unlabeled
// target always receives the next free label, which is forced by minimality.
struct SearchState {
    std::array<std::int8_t, kMaxVertices> label;
    std::array<std::int8_t, kMaxVertices> order;  // order[k] = vertex labeled k
    std::int8_t next;                             // next free label
};

struct SearchResult {
    std::vector<SearchState> states;
    VectorGraph graph;
    int labeled = 0;  // labels 0..labeled-1 cover every non-isolated vertex
};

SearchResult search(const VectorGraph& g) {
    const int n = g.size();
    SearchResult res;
    res.graph = VectorGraph(n);

    SearchState init{};
    init.label.fill(-1);
    init.order.fill(-1);
    init.next = 0;
    std::vector<SearchState> frontier{init};
    std::vector<SearchState> next;

    for (int k = 0; k < n; ++k) {
        // Value of the step: the target emitted by label k, or kNone when label k
        // carries no arrow (always worse than emitting one).
        constexpr int kNone = std::numeric_limits<int>::max();
        int best = kNone;
        bool any = false;
        next.clear();
        auto offer = [&](const SearchState& ns, int t) {
            if (t < best) {
                best = t;
                next.clear();
            }
            if (t == best) next.push_back(ns);
            any = true;
        };
        auto emit = [&](SearchState ns, int v) {
            const int w = g.target(v);
            int t;
            if (ns.label[w] >= 0) {
                t = ns.label[w];
            } else {
                t = ns.next;
                ns.label[w] = ns.next;
                ns.order[ns.next] = static_cast<std::int8_t>(w);
                ++ns.next;
            }
            offer(ns, t);
        };
        for (const SearchState& st : frontier) {
            if (k < st.next) {
                const int v = st.order[k];
                if (g.has_out(v)) emit(st, v);
                else offer(st, kNone);
                continue;
            }
            for (int v = 0; v < n; ++v) {
                if (st.label[v] >= 0 || !g.has_out(v)) continue;
                SearchState ns = st;
                ns.label[v] = static_cast<std::int8_t>(k);
                ns.order[k] = static_cast<std::int8_t>(v);
                ns.next = static_cast<std::int8_t>(k + 1);
                emit(ns, v);
            }
        }
        if (!any) break;  // only isolated vertices remain
        if (best != kNone) res.graph.set_arrow(k, best);
        frontier.swap(next);
        res.labeled = k + 1;
    }
    res.states = std::move(frontier);
    return res;
}

int order_sign(const SearchState& st, const VectorGraph& g, int labeled) {
    int inv = 0;
    for (int a = 0; a < labeled; ++a) {
        if (!g.has_out(st.order[a])) continue;
        for (int b = a + 1; b < labeled; ++b)
            if (g.has_out(st.order[b]) && st.order[a] > st.order[b]) ++inv;
    }
    return (inv & 1) ? -1 : 1;
}

}  // namespace

CanonicalForm canonicalize(const VectorGraph& g) {
    const int n = g.size();
    SearchResult r = search(g);
    CanonicalForm cf;
    cf.graph = r.graph;

    int isolated = 0;
    for (int v = 0; v < n; ++v)
        if (g.is_isolated(v)) ++isolated;
    cf.automorphisms = static_cast<std::uint64_t>(r.states.size()) * factorial(isolated);

    bool plus = false;
    bool minus = false;
    for (const SearchState& st : r.states) {
        (order_sign(st, g, r.labeled) > 0 ? plus : minus) = true;
        if (plus && minus) break;
    }
    cf.sign_zero = plus && minus;
    cf.sign = plus ? 1 : -1;
    return cf;
}

Permutation canonical_labeling(const VectorGraph& g) {
    const int n = g.size();
    SearchResult r = search(g);
    const SearchState& st = r.states.front();
    std::vector<int> im(n, -1);
    int next = r.labeled;
    for (int v = 0; v < n; ++v) im[v] = st.label[v] >= 0 ? st.label[v] : next++;
    return Permutation(std::move(im));
}

const CanonicalForm& CanonicalCache::get(const VectorGraph& g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(g, canonicalize(g)).first->second;
}

}  // namespace graphcohom
