#include "commands.hpp"

#include <hodge/error.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using hodge::Error;
using hodge::ErrorKind;
using namespace hodge::cli;

nlohmann::json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) {
            throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
    }
}

int emit(const Report& report, const std::string& format, const std::string& out_path) {
    std::string body = format == "json" ? report.json.dump(2) + "\n" : report.text;
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kInvalidInput;
        }
        out << body;
    }
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for atypical Hodge loci: root systems, gradings, "
                 "dimension counts and Jacobian rings."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string out_path;
    RunConfig config;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "Write the report to FILE instead of stdout");
    app.add_option("--budget", config.budget, "Maximum number of positive roots during enumeration");

    std::string type;
    std::optional<std::string> matrix;
    std::vector<std::string> positionals;

    auto* roots = app.add_subcommand("roots", "Root system of a Cartan type or matrix");
    roots->add_option("type", type, "Cartan type such as E8");
    roots->add_option("--matrix", matrix, "Cartan matrix as JSON, e.g. [[2,-3],[-1,2]]");

    auto* grade_cmd = app.add_subcommand("grade", "Degrees of the roots under a grading element");
    grade_cmd->add_option("--matrix", matrix, "Cartan matrix as JSON instead of a type");
    grade_cmd->add_option("args", positionals, "[TYPE] ELEMENT, e.g. A3 1,1,1 or A3 [1,1,1]")->required()->expected(1, 64);

    auto* lemmas = app.add_subcommand("lemmas", "Run the level-three recovery checks at one grading element");
    lemmas->add_option("--matrix", matrix, "Cartan matrix as JSON instead of a type");
    lemmas->add_option("args", positionals, "[TYPE] ELEMENT")->required()->expected(1, 64);

    auto* verify = app.add_subcommand("verify", "Exhaustive grading grid over simple Lie algebras");
    verify->add_option("--max-rank", config.max_rank, "Largest rank")->check(CLI::Range(1, 8));
    verify->add_option("--max-e", config.max_entry, "Largest entry of E")->check(CLI::Range(0, 6));
    verify->add_option("--types", config.types, "Letters of the Cartan types to include");

    HypersurfaceOptions hyp;
    std::string poly_path;
    auto add_hyp = [&](CLI::App* sub) {
        sub->add_option("n", hyp.n, "Dimension of X")->required()->check(CLI::Range(0, 6));
        sub->add_option("d", hyp.d, "Degree of F")->required()->check(CLI::Range(1, 30));
        sub->add_option("--poly", poly_path, "JSON file with the terms of F (Fermat otherwise)");
    };
    auto* hypersurface = app.add_subcommand("hypersurface", "Hodge numbers and Jacobian ring invariants");
    add_hyp(hypersurface);
    hypersurface->add_option("-k", hyp.k, "Order of the nonvanishing certificate")->check(CLI::Range(1, 12));

    int mult_degree = 0;
    bool entries = false;
    auto* mult = app.add_subcommand("mult", "Multiplication map R^d x R^a -> R^{a+d}");
    add_hyp(mult);
    mult->add_option("a", mult_degree, "Degree a")->required();
    mult->add_flag("--entries", entries, "Include the nonzero structure constants");

    int piece_degree = 0;
    auto* piece = app.add_subcommand("piece", "Monomial basis of the graded piece R^m");
    add_hyp(piece);
    piece->add_option("m", piece_degree, "Degree m")->required();

    std::string forms_path;
    auto* sigma = app.add_subcommand("sigma", "dim sigma(lambda) for a fourfold from generators of lambda");
    add_hyp(sigma);
    sigma->add_option("--forms", forms_path, "JSON array of degree-d forms")->required();

    std::string input_path;
    auto* atypical = app.add_subcommand("atypical", "Expected vs actual codimension and the forcing balance");
    atypical->add_option("input", input_path, "JSON file, or - for stdin")->required();

    auto* nl = app.add_subcommand("nl", "Codimension bounds for Noether-Lefschetz loci");
    nl->add_option("input", input_path, "JSON file, or - for stdin")->required();

    long expected = 0;
    long actual = 0;
    auto* correction = app.add_subcommand("correction", "Correction term expected - actual");
    correction->add_option("expected", expected)->required();
    correction->add_option("actual", actual)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kSuccess : kInvalidInput;
    }

    try {
        auto cartan = [&] {
            if (type.empty() && !matrix) {
                throw Error(ErrorKind::InvalidInput, "give a Cartan type or --matrix");
            }
            return parse_cartan(type, matrix);
        };
        // grade and lemmas take [TYPE] ELEMENT; the type is omitted with --matrix.
        // CLI11 splits a bracketed argument such as [1,1] into items, so the
        // element is reassembled from everything after the type.
        std::string element;
        if (!positionals.empty()) {
            std::size_t first = 0;
            if (!matrix) {
                if (positionals.size() < 2) {
                    throw Error(ErrorKind::InvalidInput, "give a Cartan type and a grading element");
                }
                type = positionals.front();
                first = 1;
            }
            for (std::size_t i = first; i < positionals.size(); ++i) {
                if (i > first) element += ',';
                element += positionals[i];
            }
        }
        auto load_poly = [&] {
            if (!poly_path.empty()) hyp.polynomial = read_json(poly_path);
        };

        Report report;
        if (*roots) {
            report = cmd_roots(cartan(), config);
        } else if (*grade_cmd) {
            auto spec = cartan();
            report = cmd_grade(spec, parse_int_list(element), config);
        } else if (*lemmas) {
            auto spec = cartan();
            report = cmd_lemmas(spec, parse_int_list(element), config);
        } else if (*verify) {
            report = cmd_verify(config);
        } else if (*hypersurface) {
            load_poly();
            report = cmd_hypersurface(hyp);
        } else if (*mult) {
            load_poly();
            report = cmd_mult(hyp, mult_degree, entries);
        } else if (*piece) {
            load_poly();
            report = cmd_piece(hyp, piece_degree);
        } else if (*sigma) {
            load_poly();
            report = cmd_sigma(hyp, read_json(forms_path));
        } else if (*atypical) {
            report = cmd_atypical(read_json(input_path));
        } else if (*nl) {
            report = cmd_nl(read_json(input_path));
        } else if (*correction) {
            report = cmd_correction(expected, actual);
        }
        return emit(report, format, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}
