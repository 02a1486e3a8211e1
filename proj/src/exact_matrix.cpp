#include "graphcohom/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace graphcohom {

void SparseExactMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
}

void SparseExactMatrix::set(int r, int c, const mpq_class& q) {
    check(r, c);
    if (q == 0) columns_[c].erase(r);
    else columns_[c][r] = q;
}

void SparseExactMatrix::add(int r, int c, const mpq_class& q) {
    check(r, c);
    mpq_class& x = columns_[c][r];
    x += q;
    if (x == 0) columns_[c].erase(r);
}

mpq_class SparseExactMatrix::get(int r, int c) const {
    check(r, c);
    auto it = columns_[c].find(r);
    return it == columns_[c].end() ? mpq_class(0) : it->second;
}

void SparseExactMatrix::set_column(int c, Column col) {
    if (c < 0 || c >= cols_) throw std::out_of_range("column index out of range");
    for (auto it = col.begin(); it != col.end();) {
        if (it->first < 0 || it->first >= rows_) throw std::out_of_range("column entry out of range");
        it = it->second == 0 ? col.erase(it) : std::next(it);
    }
    columns_[c] = std::move(col);
}

void SparseExactMatrix::append_column(Column col) {
    columns_.emplace_back();
    ++cols_;
    if (!col.empty()) set_column(cols_ - 1, std::move(col));
}

std::size_t SparseExactMatrix::nonzeros() const {
    std::size_t nz = 0;
    for (const auto& c : columns_) nz += c.size();
    return nz;
}

SparseExactMatrix SparseExactMatrix::multiply(const SparseExactMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    SparseExactMatrix res(rows_, other.cols_);
    for (int c = 0; c < other.cols_; ++c)
        for (const auto& [k, b] : other.columns_[c])
            for (const auto& [r, a] : columns_[k]) res.add(r, c, a * b);
    return res;
}

std::string SparseExactMatrix::to_triplets() const {
    std::ostringstream os;
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, q] : columns_[c]) os << r + 1 << ' ' << c + 1 << ' ' << q.get_str() << '\n';
    return os.str();
}

SparseExactMatrix SparseExactMatrix::from_triplets(int rows, int cols, const std::string& text) {
    SparseExactMatrix m(rows, cols);
    std::istringstream is(text);
    int r, c;
    std::string q;
    while (is >> r >> c >> q) m.add(r - 1, c - 1, mpq_class(q));
    if (!is.eof()) throw std::invalid_argument("malformed triplet text");
    return m;
}

namespace {

using SparseVec = std::vector<std::pair<int, mpz_class>>;  // sorted by index, no zeros

SparseVec primitive(const SparseExactMatrix::Column& col) {
    mpz_class l = 1;
    for (const auto& [r, q] : col) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    SparseVec v;
    v.reserve(col.size());
    mpz_class g = 0;
    for (const auto& [r, q] : col) {
        mpz_class x = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        v.emplace_back(r, std::move(x));
    }
    if (g > 1)
        for (auto& [r, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

void make_primitive(SparseVec& v) {
    mpz_class g = 0;
    for (const auto& [r, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [r, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a·u − b·p, dropping the (cancelled) leading entry.
SparseVec combine(const mpz_class& a, const SparseVec& u, const mpz_class& b, const SparseVec& p) {
    SparseVec out;
    out.reserve(u.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < u.size() || j < p.size()) {
        if (j == p.size() || (i < u.size() && u[i].first < p[j].first)) {
            out.emplace_back(u[i].first, a * u[i].second);
            ++i;
        } else if (i == u.size() || p[j].first < u[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            mpz_class x = a * u[i].second - b * p[j].second;
            if (x != 0) out.emplace_back(u[i].first, std::move(x));
            ++i, ++j;
        }
    }
    return out;
}

std::vector<std::vector<mpq_class>> dense(const SparseExactMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, q] : m.column(c)) a[r][c] = q;
    return a;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<mpq_class>>& a, int cols) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(a.size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const mpq_class inv = 1 / a[r][c];
        for (int k = c; k < static_cast<int>(a[r].size()); ++k) a[r][k] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c];
            for (int k = c; k < static_cast<int>(a[i].size()); ++k)
                if (a[r][k] != 0) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank_exact(const SparseExactMatrix& m) {
    // Incremental echelon basis keyed by leading row index.
    std::unordered_map<int, SparseVec> pivots;
    for (int c = 0; c < m.cols(); ++c) {
        SparseVec v = primitive(m.column(c));
        while (!v.empty()) {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end()) {
                if (v.front().second < 0)
                    for (auto& [r, x] : v) x = -x;
                const int lead = v.front().first;
                pivots.emplace(lead, std::move(v));
                break;
            }
            const SparseVec& p = it->second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), v.front().second.get_mpz_t());
            const mpz_class a = p.front().second / g;
            const mpz_class b = v.front().second / g;
            v = combine(a, v, b, p);
            make_primitive(v);
        }
    }
    return pivots.size();
}

std::size_t rank_bareiss(const SparseExactMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int c = 0; c < cols; ++c) {
        mpz_class l = 1;
        for (const auto& [r, q] : m.column(c)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        for (const auto& [r, q] : m.column(c)) a[r][c] = q.get_num() * (l / q.get_den());
    }
    mpz_class prev = 1;
    std::size_t rank = 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int k = c + 1; k < cols; ++k) {
                a[i][k] = a[r][c] * a[i][k] - a[i][c] * a[r][k];
                mpz_divexact(a[i][k].get_mpz_t(), a[i][k].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<mpq_class>> solve_exact(const SparseExactMatrix& m, const std::vector<mpq_class>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve_exact: dimension mismatch");
    auto a = dense(m);
    for (int r = 0; r < m.rows(); ++r) a[r].push_back(b[r]);
    const auto pivots = rref(a, m.cols() + 1);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<mpq_class> x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][m.cols()];
    return x;
}

std::vector<std::vector<mpq_class>> nullspace_exact(const SparseExactMatrix& m) {
    auto a = dense(m);
    const auto pivots = rref(a, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> x(m.cols());
        x[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a[k][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace graphcohom
