#include "graphcohom/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "graphcohom/canonical.hpp"

namespace graphcohom {

int max_enumeration_n() {
    int bound = kDefaultMaxN;
    if (const char* env = std::getenv("GRAPHCOHOM_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) bound = static_cast<int>(v);
    }
    return std::min(bound, kMaxVertices - 1);
}

SymmetricBasis::SymmetricBasis(int n, std::vector<VectorGraph> reps) : n_(n), reps_(std::move(reps)) {
    for (std::size_t k = 0; k < reps_.size(); ++k) index_.emplace(reps_[k], static_cast<int>(k));
}

int SymmetricBasis::find(const VectorGraph& canonical) const {
    auto it = index_.find(canonical);
    return it == index_.end() ? -1 : it->second;
}

namespace {

void check_bound(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > max_enumeration_n())
        throw ResourceError("n=" + std::to_string(n) + " exceeds the enumeration bound " +
                            std::to_string(max_enumeration_n()) + " (set GRAPHCOHOM_MAX_N)");
}

SymmetricBasis finish(int n, std::vector<VectorGraph> reps) {
    std::sort(reps.begin(), reps.end(),
              [](const VectorGraph& a, const VectorGraph& b) { return VectorGraph::compare_encoding(a, b) < 0; });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return SymmetricBasis(n, std::move(reps));
}

// Graphs on which the identity labeling is a legal run of the canonical search:
// labels are used in order, an arrow either hits an existing label or the next
// free one, and a fresh label carries an arrow unless only isolated vertices are
// left. Every canonical form is of this shape; candidates are then confirmed by
// canonicalizing.
struct Partial {
    VectorGraph g;
    int k;  // label being decided
    int L;  // next free label
};

template <class Visit>
void grow(const Partial& p, int n, int stop_depth, const Visit& visit) {
    if (p.k == n || p.k == stop_depth) {
        visit(p);
        return;
    }
    auto with_arrow = [&](int L, int t) {
        Partial q{p.g, p.k + 1, L};
        q.g.set_arrow(p.k, t);
        grow(q, n, stop_depth, visit);
    };
    if (p.k < p.L) {
        grow(Partial{p.g, p.k + 1, p.L}, n, stop_depth, visit);
        for (int t = 0; t < p.L; ++t) with_arrow(p.L, t);
        if (p.L < n) with_arrow(p.L + 1, p.L);
    } else {
        visit(Partial{p.g, n, p.L});  // the rest is isolated
        for (int t = 0; t <= p.k; ++t) with_arrow(p.k + 1, t);
        if (p.k + 1 < n) with_arrow(p.k + 2, p.k + 1);
    }
}

void confirm(const VectorGraph& g, std::vector<VectorGraph>& out) {
    const CanonicalForm cf = canonicalize(g);
    if (!cf.sign_zero && cf.graph == g) out.push_back(g);
}

}  // namespace

SymmetricBasis enumerate_graphs(int n, Execution exec) {
    check_bound(n);
    if (n == 0) return SymmetricBasis(0, {VectorGraph(0)});

    // Expand the first labels serially, then finish each prefix in parallel.
    std::vector<Partial> seeds;
    std::vector<VectorGraph> reps;
    grow(Partial{VectorGraph(n), 0, 0}, n, std::min(n, 3), [&](const Partial& p) {
        if (p.k == n) confirm(p.g, reps);
        else seeds.push_back(p);
    });

    std::vector<std::vector<VectorGraph>> found(seeds.size());
    const long count = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
    for (long s = 0; s < count; ++s)
        grow(seeds[s], n, n, [&](const Partial& p) { confirm(p.g, found[s]); });

    for (auto& f : found) reps.insert(reps.end(), f.begin(), f.end());
    return finish(n, std::move(reps));
}

SymmetricBasis enumerate_graphs_bruteforce(int n) {
    check_bound(n);
    std::unordered_set<VectorGraph, VectorGraphHash> seen;
    VectorGraph g(n);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            const CanonicalForm cf = canonicalize_bruteforce(g);
            if (!cf.sign_zero) seen.insert(cf.graph);
            return;
        }
        for (int t = -1; t < n; ++t) {
            if (t >= 0) g.set_arrow(v, t);
            self(self, v + 1);
            if (t >= 0) g.clear_arrow(v);
        }
    };
    rec(rec, 0);
    return finish(n, std::vector<VectorGraph>(seen.begin(), seen.end()));
}

}  // namespace graphcohom
