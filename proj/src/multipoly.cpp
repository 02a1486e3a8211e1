#include "graphcohom/multipoly.hpp"

#include <stdexcept>

namespace graphcohom {

MultiPoly MultiPoly::constant(int d, const mpq_class& c) {
    MultiPoly p(d);
    p.add_term(Exponents(d, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int d, int i) {
    if (i < 0 || i >= d) throw std::out_of_range("variable index out of range");
    Exponents e(d, 0);
    e[i] = 1;
    return monomial(d, e, 1);
}

MultiPoly MultiPoly::monomial(int d, const Exponents& e, const mpq_class& c) {
    MultiPoly p(d);
    p.add_term(e, c);
    return p;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e) s += x;
        best = std::max(best, s);
    }
    return best;
}

void MultiPoly::check_dim(const MultiPoly& o) const {
    if (d_ != o.d_) throw std::invalid_argument("polynomials over different dimensions");
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != d_) throw std::invalid_argument("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
    if (c == 0) terms_.clear();
    else
        for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_dim(b);
    MultiPoly r(a.d_);
    MultiPoly::Exponents e(a.d_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.d_; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::derivative(int i) const {
    if (i < 0 || i >= d_) throw std::out_of_range("derivative index out of range");
    MultiPoly r(d_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents f = e;
        --f[i];
        r.add_term(f, c * e[i]);
    }
    return r;
}

mpq_class MultiPoly::evaluate(const std::vector<mpq_class>& x) const {
    if (static_cast<int>(x.size()) != d_) throw std::invalid_argument("evaluation point has wrong dimension");
    mpq_class s = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i < d_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        s += t;
    }
    return s;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    return d_ == o.d_ && terms_ == o.terms_;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.get_str();
        for (int i = 0; i < d_; ++i)
            if (e[i]) s += "*x" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return s;
}

}  // namespace graphcohom
