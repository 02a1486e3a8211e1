#ifndef GRAPHCOHOM_SIGNS_HPP
#define GRAPHCOHOM_SIGNS_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "graphcohom/vector_graph.hpp"

namespace graphcohom {

// Bijection of {0..n-1}; images[i] is the image of i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int n);
    // (j, 0, ..., ĵ, ..., n-1): j first, the others in order.
    static Permutation front_insertion(int j, int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(i); }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Parity grading per position: parities[i] = |Deb(i)| mod 2 for graphs, |α_i| mod 2
// for operator arguments.
class DegreeVector {
public:
    DegreeVector() = default;
    explicit DegreeVector(std::vector<std::uint8_t> parities);
    DegreeVector(std::initializer_list<int> parities);
    static DegreeVector of(const VectorGraph& g) { return DegreeVector(g.out_parities()); }

    int size() const { return static_cast<int>(parities_.size()); }
    bool odd(int i) const { return parities_.at(i) != 0; }
    const std::vector<std::uint8_t>& parities() const { return parities_; }
    bool operator==(const DegreeVector&) const = default;

private:
    std::vector<std::uint8_t> parities_;
};

// Standard signature.
int sign_eps(const Permutation& sigma);

// Koszul sign of the arrangement (v_σ(0), ..., v_σ(n-1)): the signature of the
// order in which the odd-parity elements appear.
int sign_eps_graded(const Permutation& sigma, const DegreeVector& d);

// Koszul sign picked up by relabeling: element i moves to position σ(i).
// Equals sign_eps_graded(σ⁻¹, d).
int relabel_sign(const Permutation& sigma, const DegreeVector& d);

// sign_eps_graded((j, 0, ..., ĵ, ..., n-1), d) in O(n).
int front_insertion_sign(int j, const DegreeVector& d);

// Arrow i -> t becomes σ(i) -> σ(t).
VectorGraph permute(const VectorGraph& g, const Permutation& sigma);

// Koszul sign τ(α_1, ..., α_n) = (-1)^{Σ (n-i) deg(α_i)} for the grading deg = |·| - 1.
// `degrees` holds deg(α_i) (any integers; only parity matters).
int tau_sign(const std::vector<int>& degrees);

}  // namespace graphcohom

#endif
