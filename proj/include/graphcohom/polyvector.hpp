#ifndef GRAPHCOHOM_POLYVECTOR_HPP
#define GRAPHCOHOM_POLYVECTOR_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphcohom/multipoly.hpp"

namespace graphcohom {

// Polynomial polyvector field on R^d, possibly inhomogeneous:
// α = Σ_{i_1<...<i_k} a_{i_1...i_k} ∂_{i_1}∧...∧∂_{i_k}, indices 0-based.
// The stored a_I equals k! times the fully antisymmetric component α^I.
class PolyVector {
public:
    using Index = std::vector<int>;

    PolyVector() = default;
    explicit PolyVector(int d) : d_(d) {}
    static PolyVector function(const MultiPoly& f);
    // f ∂_{t_1}∧...∧∂_{t_k} for an arbitrary index tuple.
    static PolyVector term(const MultiPoly& f, const Index& t);

    int dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Index, MultiPoly>& terms() const { return terms_; }

    // Adds f ∂_{t_1}∧...∧∂_{t_k}; the tuple is sorted with its sign, repeats vanish.
    void add(const Index& t, const MultiPoly& f);
    // Coefficient of ∂_{t_1}∧...∧∂_{t_k}: stored value times the sorting sign,
    // zero on a repeated index.
    MultiPoly coefficient(const Index& t) const;

    std::set<int> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }
    // Tensor degree |α| of a nonzero homogeneous polyvector; throws otherwise.
    int degree() const;
    PolyVector part(int k) const;
    MultiPoly scalar_part() const;

    PolyVector& operator+=(const PolyVector& o);
    PolyVector& operator-=(const PolyVector& o);
    PolyVector& operator*=(const mpq_class& c);
    friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
    friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
    friend PolyVector operator*(const mpq_class& c, PolyVector a) { return a *= c; }
    PolyVector operator-() const { return mpq_class(-1) * *this; }

    // Coefficient-wise ∂/∂x_i.
    PolyVector derivative(int i) const;

    bool operator==(const PolyVector& o) const;
    std::string str() const;

private:
    void check_dim(const PolyVector& o) const;

    int d_ = 0;
    std::map<Index, MultiPoly> terms_;
};

// Sign that sorts the tuple, 0 on a repeat. `t` is sorted in place.
int sort_with_sign(PolyVector::Index& t);

PolyVector wedge(const PolyVector& a, const PolyVector& b);

// ∇_α β = Σ_r (-1)^{r-1} α^{i_1..i_k} (∂_{i_r} β^{J}) ∂_{i_1}∧..∂̂_{i_r}..∧∂_{i_k}∧∂_J.
PolyVector nabla(const PolyVector& a, const PolyVector& b);
// Q(α, β) = ∇_α β + (-1)^{|α||β|} ∇_β α, bilinear over homogeneous parts.
PolyVector q_bracket(const PolyVector& a, const PolyVector& b);
// [α, β] = (-1)^{|α|-1} Q(α, β), bilinear over homogeneous parts.
PolyVector schouten(const PolyVector& a, const PolyVector& b);

}  // namespace graphcohom

#endif
