#ifndef GRAPHCOHOM_COHOMOLOGY_HPP
#define GRAPHCOHOM_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphcohom/combination.hpp"
#include "graphcohom/enumeration.hpp"
#include "graphcohom/exact_matrix.hpp"

namespace graphcohom {

// Columns indexed by `src`, rows by `dst` (one more vertex). Entry (r, c) is the
// coefficient of dst[r] in ∂ of the orbit-normalized symmetrization of src[c].
SparseExactMatrix boundary_matrix(const SymmetricBasis& src, const SymmetricBasis& dst,
                                  Execution exec = Execution::parallel, bool literal_isolated_sign = false);

// Same matrix through the labeled route: expands every orbit and applies the
// graph-wise formula term by term. Slow; used to validate the fast path.
SparseExactMatrix boundary_matrix_reference(const SymmetricBasis& src, const SymmetricBasis& dst);

// Coordinates of a class in the orbit-normalized basis: x_k = c[K_k] / |orbit(K_k)|.
std::vector<mpq_class> coordinates(const CanonicalCombination& c, const SymmetricBasis& basis);
// Σ x_k · (orbit-normalized symmetrization of basis[k]), as a class.
CanonicalCombination from_coordinates(const std::vector<mpq_class>& x, const SymmetricBasis& basis);

struct CohomologyReport {
    int n = 0;
    bool include_one = true;
    std::size_t basis_size = 0;
    std::size_t basis_size_next = 0;
    std::size_t rank_d_n = 0;
    std::size_t rank_d_prev = 0;
    std::size_t ker_dim = 0;
    long h_dim = 0;
    std::size_t expected = 0;
    // Cocycles spanning H^n modulo coboundaries, orbit-normalized.
    std::vector<GraphCombination> representatives;
    // True when the representatives are the predicted wheel products.
    bool representatives_predicted = false;

    // Fixed key order, no whitespace variation.
    std::string to_json() const;
    std::string to_text() const;
};

// Needs bases up to n + 1; throws ResourceError beyond the enumeration bound.
CohomologyReport cohomology_report(int n, bool include_one, Execution exec = Execution::parallel);

// The predicted wheel products at n are cocycles, independent modulo im ∂_{n-1}.
struct RankCertificate {
    std::size_t predicted = 0;
    bool all_cocycles = false;
    std::size_t rank_image = 0;
    std::size_t rank_augmented = 0;

    bool independent() const { return rank_augmented == rank_image + predicted; }
    bool ok() const { return all_cocycles && independent(); }
};

RankCertificate certify_predicted(int n, bool include_one, Execution exec = Execution::parallel);

// c must be symmetric (PreconditionError otherwise).
bool is_cocycle(const GraphCombination& c);

// Symmetric β with ∂β = target, or nullopt when target is not a coboundary.
std::optional<GraphCombination> solve_coboundary(const GraphCombination& target);

}  // namespace graphcohom

#endif
