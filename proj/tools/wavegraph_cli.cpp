// Command-line front end: enumeration, bijections, tensor bases, game
// replays, drawings, and the machine verification of the basis theorem.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wavegraph/graphs.hpp"
#include "wavegraph/json_io.hpp"
#include "wavegraph/ltris.hpp"
#include "wavegraph/partition.hpp"
#include "wavegraph/render.hpp"
#include "wavegraph/tensor.hpp"
#include "wavegraph/verify.hpp"
#include "wavegraph/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct SizeArgs {
    int n = 0;
    long long m = -1;
    long long k = -1;

    void attach(CLI::App* cmd, bool need_m = true) {
        cmd->add_option("--n", n, "alphabet size / wave length (n >= 2)")
            ->required()
            ->check(CLI::Range(2, 1'000'000));
        if (need_m) {
            auto* mopt = cmd->add_option("--m", m, "number of tensor positions")
                             ->check(CLI::Range(0LL, 1'000'000LL));
            auto* kopt = cmd->add_option("--k", k, "number of waves (m = n*k)")
                             ->check(CLI::Range(0LL, 1'000'000LL));
            mopt->excludes(kopt);
            kopt->excludes(mopt);
        }
    }

    long long resolve_m() const {
        if (m >= 0) return m;
        if (k >= 0) return static_cast<long long>(n) * k;
        throw CLI::RequiredError("--m or --k");
    }
};

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw wavegraph::InvalidInput("cannot open output file " + path);
    return file;
}

std::string heights_str(const std::vector<int>& h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(h[i]);
    }
    return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace wavegraph;

    CLI::App app{"wave-graph bases of SL(n) tensor invariants"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format: text | json | svg")
        ->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--out", out_path, "write output to this file");

    auto* cmd_dim = app.add_subcommand("dim", "dimension of the invariant subspace");
    SizeArgs dim_args;
    dim_args.attach(cmd_dim);

    auto* cmd_count = app.add_subcommand("count", "count words, graphs or tableaux");
    SizeArgs count_args;
    count_args.attach(cmd_count);
    std::string count_what = "words";
    cmd_count->add_option("--what", count_what)
        ->check(CLI::IsMember({"words", "graphs", "tableaux"}));

    auto* cmd_enum = app.add_subcommand("enumerate", "list words, graphs or tableaux");
    SizeArgs enum_args;
    enum_args.attach(cmd_enum);
    std::string enum_what = "words";
    cmd_enum->add_option("--what", enum_what)
        ->check(CLI::IsMember({"words", "graphs", "tableaux"}));

    auto* cmd_convert =
        app.add_subcommand("convert", "convert among word, graph and tableau");
    std::string conv_value, conv_from, conv_to;
    cmd_convert->add_option("--value", conv_value, "input object")->required();
    cmd_convert->add_option("--from", conv_from)
        ->required()
        ->check(CLI::IsMember({"word", "graph", "tableau"}));
    cmd_convert->add_option("--to", conv_to)
        ->required()
        ->check(CLI::IsMember({"word", "graph", "tableau"}));

    auto* cmd_basis = app.add_subcommand("basis", "emit the invariant tensors t_G");
    SizeArgs basis_args;
    basis_args.attach(cmd_basis);

    auto* cmd_verify = app.add_subcommand("verify", "machine-check the basis theorem");
    SizeArgs verify_args;
    verify_args.attach(cmd_verify);
    bool with_oracle = false;
    long long budget = kDefaultOracleBudget;
    cmd_verify->add_flag("--oracle", with_oracle,
                         "also run the brute-force dimension oracle");
    cmd_verify->add_option("--budget", budget, "oracle state budget")
        ->check(CLI::PositiveNumber);

    auto* cmd_decomp =
        app.add_subcommand("decompose", "decompose the m-fold tensor power");
    SizeArgs decomp_args;
    decomp_args.attach(cmd_decomp);

    auto* cmd_ltris = app.add_subcommand("ltris", "replay a word as an L-tris game");
    std::string ltris_word;
    cmd_ltris->add_option("--word", ltris_word, "digits, e.g. 121323")->required();

    auto* cmd_render = app.add_subcommand("render", "draw a wave graph as SVG");
    std::string render_word, render_graph;
    cmd_render->add_option("--word", render_word, "balanced lattice word");
    cmd_render->add_option("--graph", render_graph, "graph as JSON");

    for (CLI::App* sub : {cmd_dim, cmd_count, cmd_enum, cmd_convert, cmd_basis,
                          cmd_verify, cmd_decomp, cmd_ltris, cmd_render})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ofstream out_file;
    try {
        std::ostream& out = open_out(out_path, out_file);

        if (cmd_dim->parsed()) {
            out << invariant_dimension(dim_args.n, dim_args.resolve_m()) << "\n";
            return kExitOk;
        }

        if (cmd_count->parsed()) {
            // all three families are in bijection; one count serves
            out << invariant_dimension(count_args.n, count_args.resolve_m()) << "\n";
            return kExitOk;
        }

        if (cmd_enum->parsed()) {
            const int n = enum_args.n;
            const long long m = enum_args.resolve_m();
            if (m % n != 0) {
                std::cerr << "warning: " << n << " does not divide " << m
                          << "; nothing to enumerate\n";
                if (format == "json") out << json::array().dump() << "\n";
                return kExitOk;
            }
            json arr = json::array();
            for (const LatticeWord& w : enumerate_balanced(n, m / n)) {
                if (enum_what == "words") {
                    if (format == "json")
                        arr.push_back(word_to_json(w));
                    else
                        out << to_string(w) << "\n";
                } else if (enum_what == "graphs") {
                    const json g = graph_to_json(word_to_graph(w));
                    if (format == "json")
                        arr.push_back(g);
                    else
                        out << g.at("components").dump() << "\n";
                } else {
                    const json t = tableau_to_json(word_to_tableau(w));
                    if (format == "json")
                        arr.push_back(t);
                    else
                        out << t.dump() << "\n";
                }
            }
            if (format == "json") out << arr.dump(2) << "\n";
            return kExitOk;
        }

        if (cmd_convert->parsed()) {
            LatticeWord word{{}, 0};
            if (conv_from == "word") {
                word = parse_word(conv_value);
            } else if (conv_from == "graph") {
                word = graph_to_word(graph_from_json(json::parse(conv_value)));
            } else {
                word = tableau_to_word(tableau_from_json(json::parse(conv_value)));
            }
            if (!is_balanced_lattice(word.letters, word.n))
                throw InvalidInput("input is not a balanced lattice object");

            if (conv_to == "word")
                out << to_string(word) << "\n";
            else if (conv_to == "graph")
                out << graph_to_json(word_to_graph(word)).dump() << "\n";
            else
                out << tableau_to_json(word_to_tableau(word)).dump() << "\n";
            return kExitOk;
        }

        if (cmd_basis->parsed()) {
            const int n = basis_args.n;
            const long long m = basis_args.resolve_m();
            if (m % n != 0) {
                std::cerr << "warning: " << n << " does not divide " << m
                          << "; the invariant space is zero\n";
                return kExitOk;
            }
            for (const WaveGraph& g : enumerate_graphs(n, static_cast<int>(m)))
                out << tensor_to_json(invariant_tensor(g)).dump() << "\n";
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            const Certificate cert = certify(verify_args.n,
                                             static_cast<int>(verify_args.resolve_m()),
                                             with_oracle, budget);
            if (format == "json") {
                out << certificate_to_json(cert).dump(2) << "\n";
            } else {
                out << "n=" << cert.n << " m=" << cert.m
                    << " dimension=" << cert.dimension << "\n";
                for (const GraphCheck& check : cert.invariance.per_graph)
                    out << "invariance " << check.word << ": lie="
                        << (check.lie_annihilated ? "pass" : "fail") << " transvections="
                        << (check.transvections_fixed ? "pass" : "fail") << "\n";
                out << "independence: triangular="
                    << (cert.independence.triangular ? "yes" : "no") << " unit_diagonal="
                    << (cert.independence.unit_diagonal ? "yes" : "no")
                    << " determinant=" << cert.independence.determinant << "\n";
                if (cert.spanning)
                    out << "spanning: oracle=" << cert.spanning->oracle_dim
                        << " formula=" << cert.spanning->formula_dim
                        << " graphs=" << cert.spanning->graph_count
                        << " rank=" << cert.spanning->rank << "\n";
                out << "verdict: " << (cert.pass ? "pass" : "fail") << "\n";
            }
            return cert.pass ? kExitOk : kExitValidation;
        }

        if (cmd_decomp->parsed()) {
            const int n = decomp_args.n;
            const long long m = decomp_args.resolve_m();
            mpz_class total = 0;
            json rows = json::array();
            for (const auto& [lambda, mult] : decompose(n, m)) {
                const mpz_class dim = dim_irrep(lambda, n);
                total += mult * dim;
                if (format == "json")
                    rows.push_back(json{{"lambda", partition_to_json(lambda)},
                                        {"padded", partition_to_json(
                                                       pad_with_full_rows(lambda, m, n))},
                                        {"multiplicity", mult.get_str()},
                                        {"dim", dim.get_str()}});
                else
                    out << lambda.to_string() << "  padded="
                        << pad_with_full_rows(lambda, m, n).to_string()
                        << "  multiplicity=" << mult << "  dim=" << dim << "\n";
            }
            mpz_class expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(m));
            if (format == "json") {
                out << json{{"rows", std::move(rows)},
                            {"total", total.get_str()},
                            {"expected", expect.get_str()},
                            {"consistent", total == expect}}
                           .dump(2)
                    << "\n";
            } else {
                out << "total=" << total << " expected=" << n << "^" << m << "="
                    << expect << (total == expect ? " ok" : " MISMATCH") << "\n";
            }
            return total == expect ? kExitOk : kExitValidation;
        }

        if (cmd_ltris->parsed()) {
            const LatticeWord word = parse_word(ltris_word);
            GameState state(word.n);
            for (std::size_t i = 0; i < word.letters.size(); ++i) {
                try {
                    state = drop(state, word.letters[i]);
                } catch (const IllegalMove& e) {
                    out << "illegal move at position " << i + 1 << ": " << e.what()
                        << "\n";
                    return kExitValidation;
                }
                const MoveRecord& mv = state.log().back();
                out << mv.index << ": col=" << mv.column << " level=" << mv.level
                    << " heights=" << heights_str(state.heights())
                    << " cleared=" << state.cleared() << "\n";
            }
            if (is_balanced_lattice(word.letters, word.n))
                out << "tableau=" << tableau_to_json(word_to_tableau(word)).dump()
                    << "\n";
            return kExitOk;
        }

        if (cmd_render->parsed()) {
            if (render_word.empty() == render_graph.empty())
                throw InvalidInput("render needs exactly one of --word or --graph");
            WaveGraph g;
            if (!render_word.empty())
                g = word_to_graph(parse_word(render_word));
            else
                g = graph_from_json(json::parse(render_graph));
            out << render_svg(g);
            return kExitOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
