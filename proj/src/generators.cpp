#include "graphcohom/generators.hpp"

#include <algorithm>
#include <map>
#include <json.hpp>
#include <set>
#include <stdexcept>

namespace graphcohom {

VectorGraph wheel(int k) {
    if (k < 1 || k > kMaxVertices) throw std::invalid_argument("wheel length out of range");
    VectorGraph g(k);
    for (int v = 0; v < k; ++v) g.set_arrow(v, (v + 1) % k);
    return g;
}

VectorGraph line(int l) {
    if (l < 0 || l + 1 > kMaxVertices) throw std::invalid_argument("line length out of range");
    VectorGraph g(l + 1);
    for (int v = 1; v <= l; ++v) g.set_arrow(v, v - 1);
    return g;
}

int MonomialSpec::vertex_count() const {
    int n = 0;
    for (int l : even_lines) n += l + 1;
    for (int l : odd_lines) n += l + 1;
    for (int k : wheels) n += k;
    return n;
}

bool MonomialSpec::has_duplicate_odd() const {
    std::set<int> ol(odd_lines.begin(), odd_lines.end());
    std::set<int> wh(wheels.begin(), wheels.end());
    return ol.size() != odd_lines.size() || wh.size() != wheels.size();
}

namespace {

void validate(const MonomialSpec& s) {
    for (int l : s.even_lines)
        if (l < 0 || l % 2) throw std::invalid_argument("even_lines must hold even lengths >= 0");
    for (int l : s.odd_lines)
        if (l < 1 || l % 2 == 0) throw std::invalid_argument("odd_lines must hold odd lengths");
    for (int k : s.wheels)
        if (k < 1) throw std::invalid_argument("wheel lengths must be >= 1");
    if (s.vertex_count() > kMaxVertices) throw std::invalid_argument("monomial has too many vertices");
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

MonomialSpec parse_monomial_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("monomial spec: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("monomial spec must be a JSON object");
    MonomialSpec s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::vector<int>* dst = it.key() == "even_lines" ? &s.even_lines
                                : it.key() == "odd_lines" ? &s.odd_lines
                                : it.key() == "wheels"    ? &s.wheels
                                                          : nullptr;
        if (!dst) throw std::invalid_argument("monomial spec: unknown key '" + it.key() + "'");
        try {
            *dst = it.value().get<std::vector<int>>();
        } catch (const nlohmann::json::exception&) {
            throw std::invalid_argument("monomial spec: '" + it.key() + "' must be a list of integers");
        }
    }
    validate(s);
    return s;
}

std::string format_monomial_spec(const MonomialSpec& s) {
    nlohmann::json j = {{"even_lines", sorted(s.even_lines)},
                        {"odd_lines", sorted(s.odd_lines)},
                        {"wheels", sorted(s.wheels)}};
    return j.dump();
}

VectorGraph monomial_graph(const MonomialSpec& s, int first_odd) {
    validate(s);
    VectorGraph g(0);
    for (int l : sorted(s.even_lines)) g = wedge_union(g, line(l));
    std::vector<int> odd = sorted(s.odd_lines);
    if (first_odd >= 0) {
        auto it = std::find(odd.begin(), odd.end(), first_odd);
        if (it == odd.end()) throw std::invalid_argument("first_odd is not among the odd lines");
        std::rotate(odd.begin(), it, it + 1);
    }
    for (int l : odd) g = wedge_union(g, line(l));
    for (int k : sorted(s.wheels)) g = wedge_union(g, wheel(k));
    return g;
}

VectorGraph monomial_graph(const MonomialSpec& s) { return monomial_graph(s, -1); }

GraphCombination sym_generator(const MonomialSpec& s) { return symmetrize(monomial_graph(s)); }

GraphCombination orbit_generator(const MonomialSpec& s) { return orbit_symmetrization(monomial_graph(s)); }

CanonicalCombination sym_generator_canonical(const MonomialSpec& s) {
    // collapse(S(g)) = n! · [g]
    const VectorGraph g = monomial_graph(s);
    CanonicalCombination c(g.size());
    c.insert(g, Rational(static_cast<unsigned long>(factorial(g.size()))));
    return c;
}

std::vector<std::vector<int>> distinct_odd_partitions(int n, bool include_one) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = min_part; p <= remaining; p += 2) {
            cur.push_back(p);
            self(self, remaining - p, p + 2);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, include_one ? 1 : 3);
    return out;
}

std::vector<MonomialSpec> predicted_specs(int n, bool include_one) {
    std::vector<MonomialSpec> specs;
    for (auto& parts : distinct_odd_partitions(n, include_one)) specs.push_back(MonomialSpec{{}, {}, parts});
    return specs;
}

std::vector<GraphCombination> predicted_basis(int n, bool include_one) {
    std::vector<GraphCombination> basis;
    for (const auto& s : predicted_specs(n, include_one)) basis.push_back(sym_generator(s));
    return basis;
}

CanonicalCombination line_monomial_image(const MonomialSpec& s) {
    validate(s);
    if (!s.wheels.empty()) throw std::invalid_argument("line_monomial_image: spec must contain lines only");
    CanonicalCombination rhs(s.vertex_count() + 1);
    std::map<int, int> k;
    for (int l : s.even_lines) ++k[l];
    for (const auto& [len, mult] : k) {
        MonomialSpec t = s;
        t.even_lines.erase(std::find(t.even_lines.begin(), t.even_lines.end(), len));
        t.odd_lines.push_back(len + 1);
        if (t.has_duplicate_odd()) continue;
        const VectorGraph g = monomial_graph(t, len + 1);
        rhs.insert(g, Rational(mult) * Rational(static_cast<unsigned long>(factorial(g.size()))));
    }
    return rhs;
}

bool line_monomial_predicts_cocycle(const MonomialSpec& s) {
    for (int l : s.even_lines)
        if (std::find(s.odd_lines.begin(), s.odd_lines.end(), l + 1) == s.odd_lines.end()) return false;
    return true;
}

}  // namespace graphcohom
