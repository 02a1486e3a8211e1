#include "graphcohom/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "graphcohom/canonical.hpp"
#include "graphcohom/coboundary.hpp"
#include "graphcohom/signs.hpp"
#include "graphcohom/text_format.hpp"

namespace graphcohom {

namespace {

int common_dim(const std::vector<PolyVector>& args) {
    if (args.empty()) throw std::invalid_argument("operator needs at least one argument");
    const int d = args.front().dim();
    for (const auto& a : args)
        if (a.dim() != d) throw std::invalid_argument("arguments over different dimensions");
    return d;
}

int inversion_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    return (inv & 1) ? -1 : 1;
}

int tensor_degree(const PolyVector& a) { return a.is_zero() ? 0 : a.degree(); }

}  // namespace

void FootedGraph::validate() const {
    const int n = base.size();
    if (static_cast<int>(leg.size()) != n) throw std::invalid_argument("leg map has wrong length");
    std::vector<int> hits(feet, 0);
    for (int v = 0; v < n; ++v) {
        if (leg[v] < 0) continue;
        if (leg[v] >= feet) throw std::invalid_argument("leg to a nonexistent foot");
        if (base.has_out(v)) throw std::invalid_argument("leg source already has an aerial arrow");
        ++hits[leg[v]];
    }
    for (int h : hits)
        if (h != 1) throw std::invalid_argument("every foot must receive exactly one leg");
}

PolyVector eval_B(const FootedGraph& g, const std::vector<PolyVector>& args) {
    g.validate();
    const int n = g.base.size();
    if (static_cast<int>(args.size()) != n) throw std::invalid_argument("eval_B: argument count mismatch");
    const int d = common_dim(args);

    std::vector<PolyVector> parts;
    std::vector<int> out_edge(n, -1);  // edge number leaving i
    std::vector<std::vector<int>> fin(n);
    std::vector<int> foot_edge(g.feet, -1);
    int edges = 0;
    for (int v = 0; v < n; ++v) {
        const bool emits = g.base.has_out(v) || g.leg[v] >= 0;
        parts.push_back(args[v].part(emits ? 1 : 0));
        if (parts.back().is_zero()) return PolyVector(d);
        if (!emits) continue;
        out_edge[v] = edges;
        if (g.base.has_out(v)) fin[g.base.target(v)].push_back(edges);
        else foot_edge[g.leg[v]] = edges;
        ++edges;
    }

    PolyVector res(d);
    std::vector<int> t(edges, 0);
    while (true) {
        MultiPoly prod = MultiPoly::constant(d, 1);
        for (int v = 0; v < n && !prod.is_zero(); ++v) {
            MultiPoly f = out_edge[v] >= 0 ? parts[v].coefficient({t[out_edge[v]]}) : parts[v].coefficient({});
            for (int e : fin[v]) f = f.derivative(t[e]);
            prod = prod * f;
        }
        if (!prod.is_zero()) {
            PolyVector::Index legs;
            for (int e : foot_edge) legs.push_back(t[e]);
            res.add(legs, prod);
        }
        int k = 0;
        while (k < edges && ++t[k] == d) t[k++] = 0;
        if (k == edges) break;
    }
    return res;
}

namespace {

PolyVector completion_sum(const VectorGraph& g, const std::vector<PolyVector>& args, bool all_assignments) {
    const int n = g.size();
    if (static_cast<int>(args.size()) != n) throw std::invalid_argument("eval_C: argument count mismatch");
    const int d = common_dim(args);
    std::vector<int> sinks, aerial;
    for (int v = 0; v < n; ++v) (g.has_out(v) ? aerial : sinks).push_back(v);

    PolyVector res(d);
    const int s = static_cast<int>(sinks.size());
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> legged;
        for (int k = 0; k < s; ++k)
            if (mask >> k & 1u) legged.push_back(sinks[k]);
        const int m = static_cast<int>(legged.size());
        const mpq_class weight(1, all_assignments ? static_cast<unsigned long>(factorial(m)) : 1ul);
        // legged is ascending; each permutation assigns legged[f] to foot f.
        do {
            FootedGraph fg{g, std::vector<int>(n, -1), m};
            for (int f = 0; f < m; ++f) fg.leg[legged[f]] = f;
            std::vector<int> order0 = aerial;
            order0.insert(order0.end(), legged.begin(), legged.end());
            PolyVector b = eval_B(fg, args);
            if (!b.is_zero()) res += (weight * inversion_sign(order0)) * b;
        } while (all_assignments && std::next_permutation(legged.begin(), legged.end()));
    }
    return res;
}

}  // namespace

PolyVector eval_C(const VectorGraph& g, const std::vector<PolyVector>& args) { return completion_sum(g, args, true); }

PolyVector eval_C_one_assignment(const VectorGraph& g, const std::vector<PolyVector>& args) {
    return completion_sum(g, args, false);
}

PolyVector eval_C(const GraphCombination& c, const std::vector<PolyVector>& args) {
    PolyVector res(common_dim(args));
    for (const auto& [g, q] : c.sorted_terms()) res += q * eval_C(g, args);
    return res;
}

PolyVector chevalley_d(const GraphCombination& delta, const std::vector<PolyVector>& args) {
    const int d = common_dim(args);
    if (delta.is_zero()) return PolyVector(d);
    if (!is_symmetric(delta)) throw PreconditionError("chevalley_d: δ is not symmetric");
    const int n = delta.vertex_count();
    if (static_cast<int>(args.size()) != n + 1) throw std::invalid_argument("chevalley_d: needs n+1 arguments");
    int arrows = -1;
    for (const auto& [g, q] : delta.terms()) {
        if (arrows >= 0 && g.arrow_count() != arrows)
            throw PreconditionError("chevalley_d: δ mixes graphs with different arrow counts");
        arrows = g.arrow_count();
    }
    const int N = n + 1;
    std::vector<int> deg(N);
    std::vector<std::uint8_t> par(N);
    for (int i = 0; i < N; ++i) {
        if (!args[i].is_homogeneous()) throw std::invalid_argument("chevalley_d: arguments must be homogeneous");
        deg[i] = tensor_degree(args[i]);
        par[i] = static_cast<std::uint8_t>(deg[i] & 1);
    }
    const DegreeVector pv(par);
    auto eps = [&](const std::vector<int>& arrangement) { return sign_eps_graded(Permutation(arrangement), pv); };

    PolyVector res(d);
    for (int i = 0; i < N; ++i) {
        std::vector<int> rest_idx;
        std::vector<PolyVector> rest;
        for (int k = 0; k < N; ++k)
            if (k != i) rest_idx.push_back(k), rest.push_back(args[k]);
        const PolyVector c = eval_C(delta, rest);

        std::vector<int> front{i};
        front.insert(front.end(), rest_idx.begin(), rest_idx.end());
        int s1 = eps(front);
        if ((arrows * (deg[i] - 1)) % 2) s1 = -s1;
        res += mpq_class(s1) * nabla(args[i], c);

        std::vector<int> back = rest_idx;
        back.push_back(i);
        int s2 = eps(back);
        if (arrows % 2) s2 = -s2;
        res += mpq_class(s2) * nabla(c, args[i]);
    }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            std::vector<int> arrangement{i, j};
            std::vector<PolyVector> inner{nabla(args[i], args[j])};
            if (inner.front().is_zero()) continue;
            for (int k = 0; k < N; ++k)
                if (k != i && k != j) arrangement.push_back(k), inner.push_back(args[k]);
            res -= mpq_class(eps(arrangement)) * eval_C(delta, inner);
        }
    return res;
}

MultiPoly zeta_operator(int k, const std::vector<PolyVector>& args) {
    const int len = 2 * k + 1;
    if (k < 0 || static_cast<int>(args.size()) != len) throw std::invalid_argument("zeta_operator: needs 2k+1 arguments");
    const int d = common_dim(args);
    for (const auto& a : args)
        if (!a.is_zero() && (!a.is_homogeneous() || a.degree() != 1))
            throw std::invalid_argument("zeta_operator: arguments must be vector fields");

    MultiPoly total(d);
    std::vector<int> sigma(len);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        const int sign = inversion_sign(sigma);
        std::vector<int> idx(len, 0);  // idx[j] = i_{j+1}
        while (true) {
            MultiPoly prod = MultiPoly::constant(d, 1);
            for (int j = 0; j < len && !prod.is_zero(); ++j) {
                const int deriv = idx[(j + len - 1) % len];
                prod = prod * args[sigma[j]].coefficient({idx[j]}).derivative(deriv);
            }
            if (sign > 0) total += prod;
            else total -= prod;
            int p = 0;
            while (p < len && ++idx[p] == d) idx[p++] = 0;
            if (p == len) break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

PolyVector lie_bracket(const PolyVector& xi, const PolyVector& eta) {
    if (xi.dim() != eta.dim()) throw std::invalid_argument("lie_bracket: dimension mismatch");
    const int d = xi.dim();
    PolyVector r(d);
    for (int i = 0; i < d; ++i) {
        MultiPoly c(d);
        for (int j = 0; j < d; ++j) {
            c += xi.coefficient({j}) * eta.coefficient({i}).derivative(j);
            c -= eta.coefficient({j}) * xi.coefficient({i}).derivative(j);
        }
        r.add({i}, c);
    }
    return r;
}

PolyVector schouten_decomposable(const std::vector<PolyVector>& xs, const std::vector<PolyVector>& ys) {
    if (xs.empty() || ys.empty()) throw std::invalid_argument("schouten_decomposable: empty wedge");
    const int d = xs.front().dim();
    const int k = static_cast<int>(xs.size());
    const int l = static_cast<int>(ys.size());
    PolyVector r(d);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j) {
            PolyVector t = PolyVector::function(MultiPoly::constant(d, 1));
            for (int a = 1; a <= k; ++a)
                if (a != i) t = wedge(t, xs[a - 1]);
            t = wedge(t, lie_bracket(xs[i - 1], ys[j - 1]));
            for (int b = 1; b <= l; ++b)
                if (b != j) t = wedge(t, ys[b - 1]);
            if ((k - i + j - 1) % 2) t *= -1;
            r += t;
        }
    return r;
}

mpq_class RandomPolyGen::coefficient() {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    const int p = num(rng_);
    const int q = den(rng_);
    mpq_class c(p, q);
    c.canonicalize();
    return c;
}

MultiPoly RandomPolyGen::poly(int d, int max_degree) {
    MultiPoly p(d);
    MultiPoly::Exponents e(d, 0);
    auto rec = [&](auto&& self, int i, int budget) -> void {
        if (i == d) {
            p.add_term(e, coefficient());
            return;
        }
        for (int x = 0; x <= budget; ++x) {
            e[i] = static_cast<std::uint8_t>(x);
            self(self, i + 1, budget - x);
        }
        e[i] = 0;
    };
    rec(rec, 0, max_degree);
    return p;
}

PolyVector RandomPolyGen::polyvector(int d, int k, int max_degree) {
    PolyVector v(d);
    if (k < 0 || k > d) return v;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        v.add(idx, poly(d, max_degree));
        int p = k - 1;
        while (p >= 0 && idx[p] == d - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    return v;
}

OracleReport oracle_crosscheck(const GraphCombination& delta, int d, int max_degree, int trials, std::uint64_t seed,
                               bool literal_isolated_sign) {
    OracleReport rep;
    rep.trials = trials;
    rep.seed = seed;
    if (delta.is_zero()) return rep;
    CoboundaryOptions opt;
    opt.literal_isolated_sign = literal_isolated_sign;
    const GraphCombination image = coboundary(delta, opt);
    const int N = delta.vertex_count() + 1;
    RandomPolyGen gen(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<PolyVector> args;
        for (int i = 0; i < N; ++i) args.push_back(gen.polyvector(d, (t >> i) & 1, max_degree));
        const PolyVector lhs = chevalley_d(delta, args);
        const PolyVector rhs = image.is_zero() ? PolyVector(d) : eval_C(image, args);
        if (!(lhs.scalar_part() == rhs.scalar_part())) {
            if (rep.agree_scalar)
                rep.first_scalar_mismatch = "trial " + std::to_string(t) + ": " + lhs.scalar_part().str() + " vs " +
                                            rhs.scalar_part().str();
            rep.agree_scalar = false;
        }
        if (!(lhs == rhs)) {
            if (rep.agree_full)
                rep.first_full_mismatch = "trial " + std::to_string(t) + ": " + lhs.str() + " vs " + rhs.str();
            rep.agree_full = false;
        }
    }
    return rep;
}

}  // namespace graphcohom
