#ifndef GRAPHCOHOM_ORACLE_HPP
#define GRAPHCOHOM_ORACLE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphcohom/combination.hpp"
#include "graphcohom/polyvector.hpp"
#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

// Aerial graph plus legs: leg[v] is the foot (0-based) receiving the leg from
// v, or -1. A leg source has no aerial arrow; every foot gets exactly one leg.
struct FootedGraph {
    VectorGraph base;
    std::vector<int> leg;
    int feet = 0;

    void validate() const;
};

// B_Γ: sum over all index assignments of Π_i ∂_{Fin(i)} α_i^{Deb(i)} times the
// wedge of the leg indices in foot order. Only the part of α_i of tensor degree
// equal to the out-degree of i contributes.
PolyVector eval_B(const FootedGraph& g, const std::vector<PolyVector>& args);

// C_Δ: all foot completions, weight 1/m!, sign between the source order and
// "aerial arrows by source, then legs by foot". Multilinear in the arguments.
PolyVector eval_C(const VectorGraph& g, const std::vector<PolyVector>& args);
PolyVector eval_C(const GraphCombination& c, const std::vector<PolyVector>& args);
// Same sum with a single foot assignment per leg set (legs in vertex order) and
// no 1/m! weight. Equal to eval_C: relabeling feet flips the sign twice.
PolyVector eval_C_one_assignment(const VectorGraph& g, const std::vector<PolyVector>& args);

// Chevalley coboundary of C_δ in the ∇ form, evaluated at n+1 homogeneous
// arguments. δ must be symmetric with a constant arrow count.
PolyVector chevalley_d(const GraphCombination& delta, const std::vector<PolyVector>& args);

// Σ_σ ε(σ) Σ ∂_{i_{2k+1}}α_{σ(1)}^{i_1} ∂_{i_1}α_{σ(2)}^{i_2} ... ∂_{i_{2k}}α_{σ(2k+1)}^{i_{2k+1}},
// computed directly from the formula. Arguments must be vector fields.
MultiPoly zeta_operator(int k, const std::vector<PolyVector>& args);

// Coordinate Lie bracket of vector fields.
PolyVector lie_bracket(const PolyVector& xi, const PolyVector& eta);

// [ξ_1∧...∧ξ_k, η_1∧...∧η_l] by the decomposable expansion in Lie brackets.
PolyVector schouten_decomposable(const std::vector<PolyVector>& xs, const std::vector<PolyVector>& ys);

// Deterministic random polynomials: coefficients p/q, p ∈ [-3, 3], q ∈ [1, 3].
class RandomPolyGen {
public:
    explicit RandomPolyGen(std::uint64_t seed) : rng_(seed) {}

    mpq_class coefficient();
    MultiPoly poly(int d, int max_degree);
    // Every increasing index tuple of length k gets an independent random coefficient.
    PolyVector polyvector(int d, int k, int max_degree);

private:
    std::mt19937_64 rng_;
};

struct OracleReport {
    bool agree_scalar = true;
    bool agree_full = true;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string first_scalar_mismatch;
    std::string first_full_mismatch;
};

// Compares chevalley_d(δ, args) with eval_C(∂δ, args) on `trials` random
// argument tuples. Trial t gives argument i tensor degree bit i of t, so small
// cases see every pattern of functions and vector fields.
OracleReport oracle_crosscheck(const GraphCombination& delta, int d, int max_degree, int trials,
                               std::uint64_t seed, bool literal_isolated_sign = false);

}  // namespace graphcohom

#endif
