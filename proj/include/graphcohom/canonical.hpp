#ifndef GRAPHCOHOM_CANONICAL_HPP
#define GRAPHCOHOM_CANONICAL_HPP

#include <cstdint>
#include <unordered_map>

#include "graphcohom/signs.hpp"
#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

// Orbit representative of g under relabeling: the relabeling with the
// lexicographically least sorted arrow list. `sign` is the Koszul sign
// (grading |Deb|) of a relabeling taking g to `graph`. When some automorphism
// of g has sign -1 the symmetrization of g vanishes; `sign_zero` is then set and
// `sign` is meaningless.
struct CanonicalForm {
    VectorGraph graph;
    int sign = 1;
    bool sign_zero = false;
    std::uint64_t automorphisms = 1;

    bool is_zero() const { return sign_zero; }
};

// Search over relabelings with prefix pruning. Exact: returns the same
// representative as canonicalize_bruteforce.
CanonicalForm canonicalize(const VectorGraph& g);

// Exhaustive minimization over all n! relabelings. Reference implementation.
CanonicalForm canonicalize_bruteforce(const VectorGraph& g);

// Relabeling that realizes canonicalize(g).graph = permute(g, result).
Permutation canonical_labeling(const VectorGraph& g);

std::uint64_t factorial(int n);

// Number of distinct relabelings of g: n! / |Aut(g)|.
inline std::uint64_t orbit_size(const CanonicalForm& c) {
    return factorial(c.graph.size()) / c.automorphisms;
}

// Memoizing wrapper; not thread-safe, use one per worker.
class CanonicalCache {
public:
    const CanonicalForm& get(const VectorGraph& g);
    std::size_t size() const { return cache_.size(); }

private:
    std::unordered_map<VectorGraph, CanonicalForm, VectorGraphHash> cache_;
};

}  // namespace graphcohom

#endif
