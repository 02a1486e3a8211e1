#ifndef GRAPHCOHOM_ENUMERATION_HPP
#define GRAPHCOHOM_ENUMERATION_HPP

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxN = 7;

// Enumeration bound: GRAPHCOHOM_MAX_N if set to a valid integer, else kDefaultMaxN.
// Never above kMaxVertices - 1.
int max_enumeration_n();

// Canonical orbit representatives on n vertices that are not sign-zero, sorted
// by arrow-list encoding.
class SymmetricBasis {
public:
    SymmetricBasis() = default;
    SymmetricBasis(int n, std::vector<VectorGraph> reps);

    int n() const { return n_; }
    std::size_t size() const { return reps_.size(); }
    const VectorGraph& operator[](std::size_t k) const { return reps_[k]; }
    const std::vector<VectorGraph>& reps() const { return reps_; }
    // Index of a canonical representative, or -1.
    int find(const VectorGraph& canonical) const;

private:
    int n_ = 0;
    std::vector<VectorGraph> reps_;
    std::unordered_map<VectorGraph, int, VectorGraphHash> index_;
};

enum class Execution { serial, parallel };

// Walks candidate canonical forms only (out-vertices first, sinks in order of
// first appearance). Throws ResourceError above max_enumeration_n().
SymmetricBasis enumerate_graphs(int n, Execution exec = Execution::parallel);

// Reference: canonicalizes all (n+1)^n out-maps.
SymmetricBasis enumerate_graphs_bruteforce(int n);

}  // namespace graphcohom

#endif
