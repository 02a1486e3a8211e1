#ifndef GRAPHCOHOM_EXACT_MATRIX_HPP
#define GRAPHCOHOM_EXACT_MATRIX_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace graphcohom {

// Column-major sparse matrix over Q.
class SparseExactMatrix {
public:
    using Column = std::map<int, mpq_class>;

    SparseExactMatrix() = default;
    SparseExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const mpq_class& q);
    void add(int r, int c, const mpq_class& q);
    mpq_class get(int r, int c) const;
    const Column& column(int c) const { return columns_.at(c); }
    void set_column(int c, Column col);
    void append_column(Column col);
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    // this * other
    SparseExactMatrix multiply(const SparseExactMatrix& other) const;

    // One `row col p/q` line per nonzero (1-based), column-major.
    std::string to_triplets() const;
    static SparseExactMatrix from_triplets(int rows, int cols, const std::string& text);

private:
    void check(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Column> columns_;
};

// Rank by sparse integer elimination: each column is scaled to a primitive
// integer vector and reduced fraction-free against an echelon set
// (a·u − b·p, then divided by the content).
std::size_t rank_exact(const SparseExactMatrix& m);

// Dense Bareiss rank; reference implementation for tests.
std::size_t rank_bareiss(const SparseExactMatrix& m);

// Some x with m·x = b, or nullopt if b is not in the column space.
std::optional<std::vector<mpq_class>> solve_exact(const SparseExactMatrix& m, const std::vector<mpq_class>& b);

// Basis of the right null space {x : m·x = 0}, in reduced form.
std::vector<std::vector<mpq_class>> nullspace_exact(const SparseExactMatrix& m);

}  // namespace graphcohom

#endif
