#include "graphcohom/combination.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "graphcohom/signs.hpp"

namespace graphcohom {

namespace {

template <class Map>
std::vector<std::pair<VectorGraph, Rational>> sorted_of(const Map& m) {
    std::vector<std::pair<VectorGraph, Rational>> v(m.begin(), m.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return VectorGraph::compare_encoding(a.first, b.first) < 0;
    });
    return v;
}

template <class Map>
bool same_terms(const Map& a, const Map& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [g, q] : a) {
        auto it = b.find(g);
        if (it == b.end() || it->second != q) return false;
    }
    return true;
}

void accumulate(std::unordered_map<VectorGraph, Rational, VectorGraphHash>& terms, const VectorGraph& g,
                const Rational& q) {
    if (q == 0) return;
    auto [it, fresh] = terms.try_emplace(g, q);
    if (!fresh) {
        it->second += q;
        if (it->second == 0) terms.erase(it);
    }
}

}  // namespace

GraphCombination GraphCombination::single(const VectorGraph& g, const Rational& q) {
    GraphCombination c(g.size());
    c.add_term(g, q);
    return c;
}

void GraphCombination::check_size(int n) {
    if (n_ < 0) n_ = n;
    else if (n_ != n)
        throw std::invalid_argument("mixing graphs with " + std::to_string(n_) + " and " + std::to_string(n) +
                                    " vertices in one combination");
}

void GraphCombination::add_term(const VectorGraph& g, const Rational& q) {
    check_size(g.size());
    accumulate(terms_, g, q);
}

GraphCombination& GraphCombination::operator+=(const GraphCombination& other) {
    if (other.n_ >= 0) check_size(other.n_);
    for (const auto& [g, q] : other.terms_) accumulate(terms_, g, q);
    return *this;
}

GraphCombination& GraphCombination::operator-=(const GraphCombination& other) {
    if (other.n_ >= 0) check_size(other.n_);
    for (const auto& [g, q] : other.terms_) accumulate(terms_, g, -q);
    return *this;
}

GraphCombination& GraphCombination::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, c] : terms_) c *= q;
    return *this;
}

Rational GraphCombination::coefficient(const VectorGraph& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<VectorGraph, Rational>> GraphCombination::sorted_terms() const { return sorted_of(terms_); }

std::vector<VectorGraph> GraphCombination::support() const {
    std::vector<VectorGraph> s;
    for (auto& [g, q] : sorted_terms()) s.push_back(g);
    return s;
}

bool GraphCombination::operator==(const GraphCombination& other) const {
    if (is_zero() && other.is_zero()) return true;
    return n_ == other.n_ && same_terms(terms_, other.terms_);
}

GraphCombination operator+(GraphCombination a, const GraphCombination& b) { return a += b; }
GraphCombination operator-(GraphCombination a, const GraphCombination& b) { return a -= b; }
GraphCombination operator*(const Rational& q, GraphCombination c) { return c *= q; }

void CanonicalCombination::check_size(int n) {
    if (n_ < 0) n_ = n;
    else if (n_ != n)
        throw std::invalid_argument("mixing graphs with " + std::to_string(n_) + " and " + std::to_string(n) +
                                    " vertices in one combination");
}

void CanonicalCombination::add_raw(const VectorGraph& key, const Rational& q) { accumulate(terms_, key, q); }

void CanonicalCombination::insert(const VectorGraph& g, const Rational& q) { insert(canonicalize(g), q); }

void CanonicalCombination::insert(const CanonicalForm& cf, const Rational& q) {
    check_size(cf.graph.size());
    if (cf.is_zero()) return;
    add_raw(cf.graph, cf.sign > 0 ? q : Rational(-q));
}

CanonicalCombination& CanonicalCombination::operator+=(const CanonicalCombination& other) {
    if (other.n_ >= 0) check_size(other.n_);
    for (const auto& [g, q] : other.terms_) add_raw(g, q);
    return *this;
}

CanonicalCombination& CanonicalCombination::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, c] : terms_) c *= q;
    return *this;
}

Rational CanonicalCombination::coefficient(const VectorGraph& canonical) const {
    auto it = terms_.find(canonical);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<VectorGraph, Rational>> CanonicalCombination::sorted_terms() const {
    return sorted_of(terms_);
}

std::vector<VectorGraph> CanonicalCombination::support() const {
    std::vector<VectorGraph> s;
    for (auto& [g, q] : sorted_terms()) s.push_back(g);
    return s;
}

bool CanonicalCombination::operator==(const CanonicalCombination& other) const {
    if (is_zero() && other.is_zero()) return true;
    return n_ == other.n_ && same_terms(terms_, other.terms_);
}

CanonicalCombination operator+(CanonicalCombination a, const CanonicalCombination& b) { return a += b; }
CanonicalCombination operator*(const Rational& q, CanonicalCombination c) { return c *= q; }

CanonicalCombination collapse(const GraphCombination& c) {
    CanonicalCombination res(c.vertex_count());
    CanonicalCache cache;
    for (const auto& [g, q] : c.terms()) res.insert(cache.get(g), q);
    return res;
}

GraphCombination expand(const CanonicalCombination& c) {
    GraphCombination res(c.vertex_count());
    for (const auto& [k, q] : c.terms()) {
        CanonicalForm cf = canonicalize(k);
        GraphCombination orbit = orbit_symmetrization(k);
        orbit *= Rational(q / Rational(static_cast<unsigned long>(orbit_size(cf))));
        res += orbit;
    }
    return res;
}

GraphCombination symmetrize(const VectorGraph& g) {
    const int n = g.size();
    const DegreeVector d = DegreeVector::of(g);
    GraphCombination res(n);
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    do {
        Permutation sigma(im);
        res.add_term(permute(g, sigma), relabel_sign(sigma, d));
    } while (std::next_permutation(im.begin(), im.end()));
    return res;
}

GraphCombination orbit_symmetrization(const VectorGraph& g) {
    const int n = g.size();
    GraphCombination res(n);
    if (canonicalize(g).is_zero()) return res;
    const DegreeVector d = DegreeVector::of(g);
    std::unordered_map<VectorGraph, int, VectorGraphHash> seen;
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    do {
        Permutation sigma(im);
        seen.try_emplace(permute(g, sigma), relabel_sign(sigma, d));
    } while (std::next_permutation(im.begin(), im.end()));
    for (const auto& [h, s] : seen) res.add_term(h, s);
    return res;
}

bool is_symmetric(const GraphCombination& c) {
    struct OrbitTally {
        Rational normalized;
        std::uint64_t count = 0;
        std::uint64_t expected = 0;
    };
    CanonicalCache cache;
    std::unordered_map<VectorGraph, OrbitTally, VectorGraphHash> orbits;
    for (const auto& [g, q] : c.terms()) {
        const CanonicalForm& cf = cache.get(g);
        if (cf.is_zero()) return false;
        Rational v = cf.sign > 0 ? q : Rational(-q);
        auto [it, fresh] = orbits.try_emplace(cf.graph);
        OrbitTally& t = it->second;
        if (fresh) {
            t.normalized = v;
            t.expected = orbit_size(cf);
        } else if (t.normalized != v) {
            return false;
        }
        ++t.count;
    }
    for (const auto& [k, t] : orbits)
        if (t.count != t.expected) return false;
    return true;
}

}  // namespace graphcohom
