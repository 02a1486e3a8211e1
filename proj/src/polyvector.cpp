#include "graphcohom/polyvector.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphcohom {

int sort_with_sign(PolyVector::Index& t) {
    int sign = 1;
    for (std::size_t a = 1; a < t.size(); ++a)
        for (std::size_t b = a; b > 0 && t[b - 1] >= t[b]; --b) {
            if (t[b - 1] == t[b]) return 0;
            std::swap(t[b - 1], t[b]);
            sign = -sign;
        }
    return sign;
}

PolyVector PolyVector::function(const MultiPoly& f) {
    PolyVector p(f.dim());
    p.add({}, f);
    return p;
}

PolyVector PolyVector::term(const MultiPoly& f, const Index& t) {
    PolyVector p(f.dim());
    p.add(t, f);
    return p;
}

void PolyVector::check_dim(const PolyVector& o) const {
    if (d_ != o.d_) throw std::invalid_argument("polyvectors over different dimensions");
}

void PolyVector::add(const Index& t, const MultiPoly& f) {
    if (f.dim() != d_) throw std::invalid_argument("coefficient dimension mismatch");
    for (int i : t)
        if (i < 0 || i >= d_) throw std::out_of_range("polyvector index out of range");
    if (f.is_zero()) return;
    Index s = t;
    const int sign = sort_with_sign(s);
    if (sign == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(std::move(s), sign > 0 ? f : -f);
        return;
    }
    if (sign > 0) it->second += f;
    else it->second -= f;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly PolyVector::coefficient(const Index& t) const {
    Index s = t;
    const int sign = sort_with_sign(s);
    auto it = terms_.find(s);
    if (sign == 0 || it == terms_.end()) return MultiPoly(d_);
    return sign > 0 ? it->second : -it->second;
}

std::set<int> PolyVector::degrees() const {
    std::set<int> k;
    for (const auto& [t, f] : terms_) k.insert(static_cast<int>(t.size()));
    return k;
}

int PolyVector::degree() const {
    const auto k = degrees();
    if (k.size() != 1) throw std::invalid_argument("degree of a zero or inhomogeneous polyvector");
    return *k.begin();
}

PolyVector PolyVector::part(int k) const {
    PolyVector p(d_);
    for (const auto& [t, f] : terms_)
        if (static_cast<int>(t.size()) == k) p.terms_.emplace(t, f);
    return p;
}

MultiPoly PolyVector::scalar_part() const { return coefficient({}); }

PolyVector& PolyVector::operator+=(const PolyVector& o) {
    check_dim(o);
    for (const auto& [t, f] : o.terms_) add(t, f);
    return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& o) {
    check_dim(o);
    for (const auto& [t, f] : o.terms_) add(t, -f);
    return *this;
}

PolyVector& PolyVector::operator*=(const mpq_class& c) {
    if (c == 0) terms_.clear();
    else
        for (auto& [t, f] : terms_) f *= c;
    return *this;
}

PolyVector PolyVector::derivative(int i) const {
    PolyVector p(d_);
    for (const auto& [t, f] : terms_) p.add(t, f.derivative(i));
    return p;
}

bool PolyVector::operator==(const PolyVector& o) const {
    if (is_zero() && o.is_zero()) return true;
    return d_ == o.d_ && terms_ == o.terms_;
}

std::string PolyVector::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [t, f] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + f.str() + ")";
        for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "^d" : " d") + std::to_string(t[k] + 1);
    }
    return s;
}

PolyVector wedge(const PolyVector& a, const PolyVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    PolyVector r(a.dim());
    for (const auto& [s, f] : a.terms())
        for (const auto& [t, g] : b.terms()) {
            PolyVector::Index u = s;
            u.insert(u.end(), t.begin(), t.end());
            r.add(u, f * g);
        }
    return r;
}

PolyVector nabla(const PolyVector& a, const PolyVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("nabla: dimension mismatch");
    PolyVector r(a.dim());
    for (const auto& [s, f] : a.terms()) {
        const int k = static_cast<int>(s.size());
        for (int pos = 0; pos < k; ++pos) {
            PolyVector::Index rest = s;
            rest.erase(rest.begin() + pos);
            const mpq_class sign = pos % 2 ? -1 : 1;
            for (const auto& [t, g] : b.terms()) {
                MultiPoly dg = g.derivative(s[pos]);
                if (dg.is_zero()) continue;
                PolyVector::Index u = rest;
                u.insert(u.end(), t.begin(), t.end());
                r.add(u, sign * (f * dg));
            }
        }
    }
    return r;
}

PolyVector q_bracket(const PolyVector& a, const PolyVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("q_bracket: dimension mismatch");
    PolyVector r(a.dim());
    for (int k : a.degrees())
        for (int l : b.degrees()) {
            const PolyVector ak = a.part(k);
            const PolyVector bl = b.part(l);
            r += nabla(ak, bl);
            PolyVector back = nabla(bl, ak);
            if ((k * l) % 2) back *= -1;
            r += back;
        }
    return r;
}

PolyVector schouten(const PolyVector& a, const PolyVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("schouten: dimension mismatch");
    PolyVector r(a.dim());
    for (int k : a.degrees()) {
        PolyVector q = q_bracket(a.part(k), b);
        if ((k - 1) % 2) q *= -1;
        r += q;
    }
    return r;
}

}  // namespace graphcohom
