#ifndef GRAPHCOHOM_MULTIPOLY_HPP
#define GRAPHCOHOM_MULTIPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace graphcohom {

// Polynomial in x_1..x_d over Q. Zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint8_t>;

    MultiPoly() = default;
    explicit MultiPoly(int d) : d_(d) {}
    static MultiPoly constant(int d, const mpq_class& c);
    // x_i, 0-based.
    static MultiPoly variable(int d, int i);
    static MultiPoly monomial(int d, const Exponents& e, const mpq_class& c);

    int dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, mpq_class>& terms() const { return terms_; }
    int total_degree() const;  // -1 for zero

    void add_term(const Exponents& e, const mpq_class& c);
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const mpq_class& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const mpq_class& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const { return mpq_class(-1) * *this; }

    // ∂/∂x_i, 0-based.
    MultiPoly derivative(int i) const;
    mpq_class evaluate(const std::vector<mpq_class>& x) const;

    bool operator==(const MultiPoly& o) const;
    std::string str() const;

private:
    void check_dim(const MultiPoly& o) const;

    int d_ = 0;
    std::map<Exponents, mpq_class> terms_;
};

}  // namespace graphcohom

#endif
