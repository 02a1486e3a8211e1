#include "graphcohom/text_format.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace graphcohom {

namespace {

// Minimal cursor over a literal; whitespace is insignificant between tokens.
class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ == s_.size();
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    int integer() {
        skip_ws();
        int v = 0;
        auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc()) fail("expected an integer");
        pos_ = static_cast<std::size_t>(p - s_.data());
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string format_graph(const VectorGraph& g) {
    std::string s = "graph n=" + std::to_string(g.size());
    auto arrows = g.arrows();
    if (arrows.empty()) return s;
    s += "; edges = ";
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (k) s += ", ";
        s += std::to_string(arrows[k].from + 1) + "->" + std::to_string(arrows[k].to + 1);
    }
    return s;
}

VectorGraph parse_graph(std::string_view text) {
    Cursor c(text);
    c.expect("graph");
    c.expect("n");
    c.expect("=");
    const int n = c.integer();
    if (n < 0 || n > kMaxVertices) c.fail("vertex count out of range");
    VectorGraph g(n);
    if (c.accept(";")) {
        if (c.done()) return g;
        c.expect("edges");
        c.expect("=");
        do {
            const int a = c.integer();
            c.expect("->");
            const int b = c.integer();
            if (a < 1 || a > n || b < 1 || b > n) c.fail("vertex label out of range 1.." + std::to_string(n));
            if (g.has_out(a - 1)) c.fail("vertex " + std::to_string(a) + " has two outgoing arrows");
            g.set_arrow(a - 1, b - 1);
        } while (c.accept(","));
    }
    if (!c.done()) c.fail("trailing characters");
    return g;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(trim(text));
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("malformed rational '" + s + "'");
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    const mpz_class d{den};
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q{mpz_class{num}, d};
    q.canonicalize();
    return q;
}

std::string format_combination(const GraphCombination& c) {
    std::string out;
    for (const auto& [g, q] : c.sorted_terms()) out += format_rational(q) + " * " + format_graph(g) + "\n";
    return out;
}

GraphCombination parse_combination(std::string_view text) {
    GraphCombination c;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto star = line.find('*');
        if (star == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected '<rational> * <graph>'");
        try {
            c.add_term(parse_graph(line.substr(star + 1)), parse_rational(line.substr(0, star)));
        } catch (const std::exception& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return c;
}

GraphCombination read_combination(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_combination(all);
}

}  // namespace graphcohom
