#include "graphcohom/cohomology.hpp"

#include <json.hpp>
#include <sstream>

#include "graphcohom/canonical.hpp"
#include "graphcohom/coboundary.hpp"
#include "graphcohom/generators.hpp"
#include "graphcohom/text_format.hpp"

namespace graphcohom {

namespace {

std::vector<mpq_class> orbit_sizes(const SymmetricBasis& b) {
    std::vector<mpq_class> s(b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        s[k] = mpq_class(static_cast<unsigned long>(orbit_size(canonicalize(b[k]))));
    return s;
}

SparseExactMatrix::Column to_column(const CanonicalCombination& image, const SymmetricBasis& dst,
                                    const std::vector<mpq_class>& dst_orbits, const mpq_class& scale) {
    SparseExactMatrix::Column col;
    for (const auto& [key, q] : image.terms()) {
        const int r = dst.find(key);
        if (r < 0) throw std::logic_error("coboundary produced a graph outside the target basis");
        col[r] = q * scale / dst_orbits[r];
    }
    return col;
}

void check_pair(const SymmetricBasis& src, const SymmetricBasis& dst) {
    if (dst.n() != src.n() + 1) throw std::invalid_argument("boundary_matrix: bases must be on n and n+1 vertices");
}

SparseExactMatrix matrix_of(const std::vector<std::vector<mpq_class>>& cols, std::size_t rows) {
    SparseExactMatrix m(static_cast<int>(rows), 0);
    for (const auto& v : cols) {
        SparseExactMatrix::Column col;
        for (std::size_t r = 0; r < v.size(); ++r)
            if (v[r] != 0) col[static_cast<int>(r)] = v[r];
        m.append_column(std::move(col));
    }
    return m;
}

}  // namespace

SparseExactMatrix boundary_matrix(const SymmetricBasis& src, const SymmetricBasis& dst, Execution exec,
                                  bool literal_isolated_sign) {
    check_pair(src, dst);
    const auto src_orbits = orbit_sizes(src);
    const auto dst_orbits = orbit_sizes(dst);
    std::vector<SparseExactMatrix::Column> cols(src.size());
    const long count = static_cast<long>(src.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Execution::parallel)
    for (long c = 0; c < count; ++c) {
        CanonicalCombination single(src.n());
        single.insert(src[c], 1);
        cols[c] = to_column(coboundary(single, literal_isolated_sign), dst, dst_orbits, src_orbits[c]);
    }
    SparseExactMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (long c = 0; c < count; ++c) m.set_column(static_cast<int>(c), std::move(cols[c]));
    return m;
}

SparseExactMatrix boundary_matrix_reference(const SymmetricBasis& src, const SymmetricBasis& dst) {
    check_pair(src, dst);
    const auto dst_orbits = orbit_sizes(dst);
    SparseExactMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        const GraphCombination image = coboundary(orbit_symmetrization(src[c]));
        m.set_column(static_cast<int>(c), to_column(collapse(image), dst, dst_orbits, 1));
    }
    return m;
}

std::vector<mpq_class> coordinates(const CanonicalCombination& c, const SymmetricBasis& basis) {
    if (!c.is_zero() && c.vertex_count() != basis.n()) throw std::invalid_argument("coordinates: vertex count mismatch");
    const auto orbits = orbit_sizes(basis);
    std::vector<mpq_class> x(basis.size());
    for (const auto& [key, q] : c.terms()) {
        const int k = basis.find(key);
        if (k < 0) throw std::logic_error("coordinates: key outside the basis");
        x[k] = q / orbits[k];
    }
    return x;
}

CanonicalCombination from_coordinates(const std::vector<mpq_class>& x, const SymmetricBasis& basis) {
    if (x.size() != basis.size()) throw std::invalid_argument("from_coordinates: dimension mismatch");
    const auto orbits = orbit_sizes(basis);
    CanonicalCombination c(basis.n());
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != 0) c.insert(basis[k], x[k] * orbits[k]);
    return c;
}

std::string CohomologyReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["basis_size"] = basis_size;
    j["basis_size_next"] = basis_size_next;
    j["rank_d_n"] = rank_d_n;
    j["rank_d_prev"] = rank_d_prev;
    j["ker_dim"] = ker_dim;
    j["h_dim"] = h_dim;
    j["expected"] = expected;
    j["representatives"] = nlohmann::ordered_json::array();
    for (const auto& r : representatives) {
        std::string lit = format_combination(r);
        if (!lit.empty() && lit.back() == '\n') lit.pop_back();
        j["representatives"].push_back(lit);
    }
    return j.dump(2);
}

std::string CohomologyReport::to_text() const {
    std::ostringstream os;
    os << "n                " << n << '\n'
       << "convention       " << (include_one ? "include-one" : "exclude-one") << '\n'
       << "basis_size       " << basis_size << '\n'
       << "basis_size_next  " << basis_size_next << '\n'
       << "rank_d_n         " << rank_d_n << '\n'
       << "rank_d_prev      " << rank_d_prev << '\n'
       << "ker_dim          " << ker_dim << '\n'
       << "h_dim            " << h_dim << '\n'
       << "expected         " << expected << '\n'
       << "representatives  " << representatives.size()
       << (representatives_predicted ? " (predicted wheel products)" : " (computed)") << '\n';
    for (std::size_t k = 0; k < representatives.size(); ++k) {
        os << "-- representative " << k + 1 << '\n' << format_combination(representatives[k]);
    }
    return os.str();
}

RankCertificate certify_predicted(int n, bool include_one, Execution exec) {
    RankCertificate cert;
    const auto specs = predicted_specs(n, include_one);
    cert.predicted = specs.size();
    const SymmetricBasis bn = enumerate_graphs(n, exec);
    const SymmetricBasis bnext = enumerate_graphs(n + 1, exec);
    const SparseExactMatrix dn = boundary_matrix(bn, bnext, exec);

    SparseExactMatrix im = n > 0 ? boundary_matrix(enumerate_graphs(n - 1, exec), bn, exec)
                                 : SparseExactMatrix(static_cast<int>(bn.size()), 0);
    cert.rank_image = rank_exact(im);

    std::vector<std::vector<mpq_class>> pred;
    for (const auto& s : specs) {
        CanonicalCombination c(n);
        c.insert(monomial_graph(s), 1);
        pred.push_back(coordinates(c, bn));
    }
    const SparseExactMatrix p = matrix_of(pred, bn.size());
    cert.all_cocycles = dn.multiply(p).is_zero();
    for (int c = 0; c < p.cols(); ++c) im.append_column(p.column(c));
    cert.rank_augmented = rank_exact(im);
    return cert;
}

CohomologyReport cohomology_report(int n, bool include_one, Execution exec) {
    CohomologyReport rep;
    rep.n = n;
    rep.include_one = include_one;
    const SymmetricBasis bn = enumerate_graphs(n, exec);
    const SymmetricBasis bnext = enumerate_graphs(n + 1, exec);
    const SparseExactMatrix dn = boundary_matrix(bn, bnext, exec);
    SparseExactMatrix dprev = n > 0 ? boundary_matrix(enumerate_graphs(n - 1, exec), bn, exec)
                                    : SparseExactMatrix(static_cast<int>(bn.size()), 0);
    rep.basis_size = bn.size();
    rep.basis_size_next = bnext.size();
    rep.rank_d_n = rank_exact(dn);
    rep.rank_d_prev = rank_exact(dprev);
    rep.ker_dim = rep.basis_size - rep.rank_d_n;
    rep.h_dim = static_cast<long>(rep.ker_dim) - static_cast<long>(rep.rank_d_prev);
    const auto specs = predicted_specs(n, include_one);
    rep.expected = specs.size();

    if (static_cast<long>(specs.size()) == rep.h_dim && certify_predicted(n, include_one, exec).ok()) {
        for (const auto& s : specs) rep.representatives.push_back(orbit_generator(s));
        rep.representatives_predicted = true;
        return rep;
    }
    // Kernel vectors that stay independent modulo the image.
    std::size_t rank = rep.rank_d_prev;
    for (const auto& v : nullspace_exact(dn)) {
        if (static_cast<long>(rep.representatives.size()) >= rep.h_dim) break;
        SparseExactMatrix trial = dprev;
        trial.append_column(matrix_of({v}, bn.size()).column(0));
        const std::size_t r = rank_exact(trial);
        if (r > rank) {
            dprev = std::move(trial);
            rank = r;
            rep.representatives.push_back(expand(from_coordinates(v, bn)));
        }
    }
    return rep;
}

bool is_cocycle(const GraphCombination& c) {
    if (!is_symmetric(c)) throw PreconditionError("is_cocycle: input combination is not symmetric");
    return coboundary(collapse(c)).is_zero();
}

std::optional<GraphCombination> solve_coboundary(const GraphCombination& target) {
    if (target.is_zero()) return GraphCombination();
    if (!is_symmetric(target)) throw PreconditionError("solve_coboundary: target is not symmetric");
    const int n = target.vertex_count();
    if (n == 0) return std::nullopt;
    const SymmetricBasis src = enumerate_graphs(n - 1);
    const SymmetricBasis dst = enumerate_graphs(n);
    const auto x = solve_exact(boundary_matrix(src, dst), coordinates(collapse(target), dst));
    if (!x) return std::nullopt;
    GraphCombination beta = expand(from_coordinates(*x, src));
    if (beta.is_zero()) beta = GraphCombination(n - 1);
    return beta;
}

}  // namespace graphcohom
