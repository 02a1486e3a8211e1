#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcohom/coboundary.hpp"
#include "graphcohom/cohomology.hpp"
#include "graphcohom/enumeration.hpp"
#include "graphcohom/generators.hpp"
#include "graphcohom/oracle.hpp"
#include "graphcohom/order.hpp"
#include "graphcohom/text_format.hpp"
#include "graphcohom/verify.hpp"

using namespace graphcohom;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Symmetrizing sums over n! relabelings; past this it is not a quick command.
constexpr int kMaxGeneratorVertices = 9;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GraphCombination read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_combination(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_combination(in);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology of aerial vector graphs"};
    app.require_subcommand(1);

    // cohomology
    int coh_n = 0;
    bool include_one = false, exclude_one = false, coh_json = false;
    std::string matrix_out;
    auto* coh = app.add_subcommand("cohomology", "dimension of the cohomology at n vertices");
    coh->add_option("--n", coh_n, "vertex count")->required();
    auto* inc = coh->add_flag("--include-one", include_one, "admit loops as length-1 wheels (default)");
    coh->add_flag("--exclude-one", exclude_one, "predicted count without length-1 wheels")->excludes(inc);
    coh->add_flag("--json", coh_json, "machine-readable report");
    coh->add_option("--matrix-out", matrix_out, "write the matrix of d_n as 'row col p/q' triplets");

    // d
    std::string d_in, d_out;
    bool d_alt = false, d_loose = false;
    auto* dcmd = app.add_subcommand("d", "coboundary of a symmetric combination");
    dcmd->add_option("--in", d_in, "combination file (stdin if omitted)");
    dcmd->add_option("--out", d_out, "output file (stdout if omitted)");
    dcmd->add_flag("--alt", d_alt, "use the grouped i<j formula");
    dcmd->add_flag("--allow-nonsymmetric", d_loose, "apply the graph-wise formula to any input");

    // homotopy
    std::string h_in, h_out;
    auto* hcmd = app.add_subcommand("homotopy", "contract the arrow out of the last 1+ vertex");
    hcmd->add_option("--in", h_in, "combination file (stdin if omitted)");
    hcmd->add_option("--out", h_out, "output file (stdout if omitted)");

    // order
    std::string order_graph;
    auto* ocmd = app.add_subcommand("order", "order word of a graph");
    ocmd->add_option("--graph", order_graph, "graph literal")->required();

    // gen
    int gen_wheel = -1, gen_line = -1;
    std::string gen_spec;
    auto* gcmd = app.add_subcommand("gen", "symmetrized generator");
    auto* gw = gcmd->add_option("--wheel", gen_wheel, "wheel length");
    auto* gl = gcmd->add_option("--line", gen_line, "line length (arrows)");
    auto* gs = gcmd->add_option("--spec", gen_spec, R"(monomial, e.g. {"even_lines":[0],"odd_lines":[1],"wheels":[3]})");
    gw->excludes(gl)->excludes(gs);
    gl->excludes(gs);
    gcmd->require_option(1);

    // oracle
    std::string o_delta;
    int o_d = 3, o_deg = 2, o_trials = 20;
    std::uint64_t o_seed = 42;
    bool o_full = false;
    auto* orc = app.add_subcommand("oracle", "compare d with the polyvector-field coboundary");
    orc->add_option("--delta", o_delta, "combination file")->required();
    orc->add_option("--d", o_d, "dimension of R^d")->check(CLI::Range(1, 6));
    orc->add_option("--max-degree", o_deg, "polynomial degree of random coefficients")->check(CLI::Range(0, 6));
    orc->add_option("--trials", o_trials, "random argument tuples")->check(CLI::NonNegativeNumber);
    orc->add_option("--seed", o_seed, "seed");
    orc->add_flag("--full-component", o_full, "also require agreement of the full polyvector, not only the scalar part");

    // verify
    std::string v_suite;
    std::uint64_t v_seed = 42;
    bool v_json = false;
    auto* vcmd = app.add_subcommand("verify", "run an invariant suite");
    vcmd->add_option("--suite", v_suite, "signs, coboundary, generators, oracle or all")->required();
    vcmd->add_option("--seed", v_seed, "seed");
    vcmd->add_flag("--json", v_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*coh) {
            const CohomologyReport r = cohomology_report(coh_n, !exclude_one);
            std::cout << (coh_json ? r.to_json() + "\n" : r.to_text());
            if (!matrix_out.empty()) {
                const SparseExactMatrix m = boundary_matrix(enumerate_graphs(coh_n), enumerate_graphs(coh_n + 1));
                write_output(matrix_out, m.to_triplets());
            }
            return 0;
        }
        if (*dcmd) {
            const GraphCombination c = read_input(d_in);
            CoboundaryOptions opt;
            opt.allow_nonsymmetric = d_loose;
            write_output(d_out, format_combination(d_alt ? coboundary_alt(c, opt) : coboundary(c, opt)));
            return 0;
        }
        if (*hcmd) {
            write_output(h_out, format_combination(homotopy(read_input(h_in))));
            return 0;
        }
        if (*ocmd) {
            std::cout << format_order(graph_order(parse_graph(order_graph))) << "\n";
            return 0;
        }
        if (*gcmd) {
            MonomialSpec s;
            if (gen_wheel >= 0) s.wheels = {gen_wheel};
            else if (gen_line >= 0) (gen_line % 2 ? s.odd_lines : s.even_lines) = {gen_line};
            else if (!gen_spec.empty()) s = parse_monomial_spec(gen_spec);
            else throw UsageError("gen: lengths must be nonnegative");
            if (s.vertex_count() > kMaxGeneratorVertices)
                throw ResourceError("gen: more than " + std::to_string(kMaxGeneratorVertices) + " vertices");
            std::cout << format_combination(sym_generator(s));
            return 0;
        }
        if (*orc) {
            std::ifstream in(o_delta);
            if (!in) throw UsageError("cannot open '" + o_delta + "'");
            const GraphCombination delta = read_combination(in);
            const OracleReport r = oracle_crosscheck(delta, o_d, o_deg, o_trials, o_seed);
            nlohmann::ordered_json j;
            j["agree_scalar"] = r.agree_scalar;
            j["agree_full"] = r.agree_full;
            j["trials"] = r.trials;
            j["seed"] = r.seed;
            std::cout << j.dump() << "\n";
            if (!r.agree_scalar) std::cerr << "scalar mismatch, " << r.first_scalar_mismatch << "\n";
            if (o_full && !r.agree_full) std::cerr << "full mismatch, " << r.first_full_mismatch << "\n";
            return r.agree_scalar && (r.agree_full || !o_full) ? 0 : kExitFail;
        }
        if (*vcmd) {
            if (v_suite != "signs" && v_suite != "coboundary" && v_suite != "generators" && v_suite != "oracle" &&
                v_suite != "all")
                throw UsageError("unknown suite '" + v_suite + "'");
            const VerificationReport r = verify_suite(v_suite, v_seed);
            std::cout << (v_json ? r.to_json() + "\n" : r.to_text());
            return r.pass() ? 0 : kExitFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
