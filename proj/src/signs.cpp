#include "graphcohom/signs.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace graphcohom {

namespace {

int parity_of_inversions(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    return (inv & 1) ? -1 : 1;
}

void require_same_size(const Permutation& sigma, const DegreeVector& d) {
    if (sigma.size() != d.size())
        throw std::invalid_argument("permutation of size " + std::to_string(sigma.size()) +
                                    " applied to degree vector of size " + std::to_string(d.size()));
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
            throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::front_insertion(int j, int n) {
    if (j < 0 || j >= n) throw std::out_of_range("front_insertion: index out of range");
    std::vector<int> im{j};
    for (int i = 0; i < n; ++i)
        if (i != j) im.push_back(i);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> im(a.size());
    for (int i = 0; i < a.size(); ++i) im[i] = a(b(i));
    return Permutation(std::move(im));
}

DegreeVector::DegreeVector(std::vector<std::uint8_t> parities) : parities_(std::move(parities)) {
    for (auto& p : parities_) p &= 1;
}

DegreeVector::DegreeVector(std::initializer_list<int> parities) {
    for (int p : parities) parities_.push_back(static_cast<std::uint8_t>(p & 1));
}

int sign_eps(const Permutation& sigma) { return parity_of_inversions(sigma.images()); }

int sign_eps_graded(const Permutation& sigma, const DegreeVector& d) {
    require_same_size(sigma, d);
    std::vector<int> odd;
    for (int p = 0; p < sigma.size(); ++p)
        if (d.odd(sigma(p))) odd.push_back(sigma(p));
    return parity_of_inversions(odd);
}

int relabel_sign(const Permutation& sigma, const DegreeVector& d) {
    require_same_size(sigma, d);
    std::vector<int> images;
    for (int i = 0; i < sigma.size(); ++i)
        if (d.odd(i)) images.push_back(sigma(i));
    return parity_of_inversions(images);
}

int front_insertion_sign(int j, const DegreeVector& d) {
    if (j < 0 || j >= d.size()) throw std::out_of_range("front_insertion_sign: index out of range");
    if (!d.odd(j)) return 1;
    int before = 0;
    for (int i = 0; i < j; ++i) before += d.odd(i) ? 1 : 0;
    return (before & 1) ? -1 : 1;
}

VectorGraph permute(const VectorGraph& g, const Permutation& sigma) {
    if (sigma.size() != g.size())
        throw std::invalid_argument("permute: permutation size does not match vertex count");
    VectorGraph res(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (g.has_out(v)) res.set_arrow(sigma(v), sigma(g.target(v)));
    return res;
}

int tau_sign(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    long long e = 0;
    for (int i = 0; i < n; ++i) e += static_cast<long long>(n - 1 - i) * (degrees[i] & 1);
    return (e & 1) ? -1 : 1;
}

}  // namespace graphcohom
