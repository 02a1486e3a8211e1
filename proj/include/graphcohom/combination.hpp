#ifndef GRAPHCOHOM_COMBINATION_HPP
#define GRAPHCOHOM_COMBINATION_HPP

#include <gmpxx.h>

#include <unordered_map>
#include <utility>
#include <vector>

#include "graphcohom/canonical.hpp"
#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

using Rational = mpq_class;

// Finite formal sum of labeled graphs with rational coefficients. All graphs
// share one vertex count. Zero coefficients are never stored.
class GraphCombination {
public:
    GraphCombination() = default;
    explicit GraphCombination(int vertex_count) : n_(vertex_count) {}

    static GraphCombination single(const VectorGraph& g, const Rational& q = 1);

    // -1 while no vertex count has been fixed (empty combination).
    int vertex_count() const { return n_; }

    void add_term(const VectorGraph& g, const Rational& q);
    GraphCombination& operator+=(const GraphCombination& other);
    GraphCombination& operator-=(const GraphCombination& other);
    GraphCombination& operator*=(const Rational& q);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const VectorGraph& g) const;

    // Terms sorted by the arrow-list encoding.
    std::vector<std::pair<VectorGraph, Rational>> sorted_terms() const;
    std::vector<VectorGraph> support() const;

    const std::unordered_map<VectorGraph, Rational, VectorGraphHash>& terms() const { return terms_; }

    bool operator==(const GraphCombination& other) const;

private:
    void check_size(int n);

    int n_ = -1;
    std::unordered_map<VectorGraph, Rational, VectorGraphHash> terms_;
};

GraphCombination operator+(GraphCombination a, const GraphCombination& b);
GraphCombination operator-(GraphCombination a, const GraphCombination& b);
GraphCombination operator*(const Rational& q, GraphCombination c);

// Combination over orbit representatives: the class of a labeled combination in
// the coinvariants of the relabeling action. Inserting a graph canonicalizes it,
// multiplies the coefficient by the canonicalization sign and drops sign-zero
// orbits. For a symmetric combination the coefficient of a representative K is
// |orbit(K)| times the labeled coefficient of K.
class CanonicalCombination {
public:
    CanonicalCombination() = default;
    explicit CanonicalCombination(int vertex_count) : n_(vertex_count) {}

    int vertex_count() const { return n_; }

    void insert(const VectorGraph& g, const Rational& q);
    void insert(const CanonicalForm& cf, const Rational& q);
    CanonicalCombination& operator+=(const CanonicalCombination& other);
    CanonicalCombination& operator*=(const Rational& q);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const VectorGraph& canonical) const;
    std::vector<std::pair<VectorGraph, Rational>> sorted_terms() const;
    std::vector<VectorGraph> support() const;
    const std::unordered_map<VectorGraph, Rational, VectorGraphHash>& terms() const { return terms_; }

    bool operator==(const CanonicalCombination& other) const;

private:
    void check_size(int n);
    void add_raw(const VectorGraph& key, const Rational& q);

    int n_ = -1;
    std::unordered_map<VectorGraph, Rational, VectorGraphHash> terms_;
};

CanonicalCombination operator+(CanonicalCombination a, const CanonicalCombination& b);
CanonicalCombination operator*(const Rational& q, CanonicalCombination c);

CanonicalCombination collapse(const GraphCombination& c);

// The symmetric labeled combination whose class is c.
GraphCombination expand(const CanonicalCombination& c);

// S(g) = Σ_σ ε(σ) σ(g) over all n! relabelings, unnormalized.
GraphCombination symmetrize(const VectorGraph& g);

// Orbit-normalized symmetrization: every distinct relabeling of g appears once
// with coefficient ±1 and g itself has coefficient +1. Zero for sign-zero graphs.
GraphCombination orbit_symmetrization(const VectorGraph& g);

// True iff c is a rational combination of symmetrizations, i.e.
// a_{σ(Δ)} = ε(σ) a_Δ for every term and every relabeling.
bool is_symmetric(const GraphCombination& c);

}  // namespace graphcohom

#endif
