// hexalink: classify, synthesize and trace angle-symmetric 6R linkages.
//
// Exit codes: 0 success (a recognized family for `classify`), 2 classification
// undetermined, 3 malformed JSON, 4 invariant violation in the input,
// 5 numeric/mathematical failure. Errors are single-line JSON on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hexalink/classify.hpp"
#include "hexalink/example1.hpp"
#include "hexalink/generate.hpp"
#include "hexalink/json_io.hpp"
#include "hexalink/sampler.hpp"

namespace {

using namespace hexalink;

std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<ScalarMode> scalar_override() {
    const char* env = std::getenv("HEXALINK_SCALAR");
    if (!env) return std::nullopt;
    const std::string v(env);
    if (v == "rational") return ScalarMode::Rational;
    if (v == "float") return ScalarMode::Float;
    throw InvalidArgument("HEXALINK_SCALAR must be \"rational\" or \"float\"");
}

int run(int argc, char** argv) {
    CLI::App app{"angle-symmetric 6R linkage toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string mode_str, family, pairs_str, grid_str, configs_path, out_path, dump_path, slice = "t3";
    double tol = kFloatTolerance;
    uint64_t seed = 0;

    auto* cls = app.add_subcommand("classify", "classify a linkage (JSON on stdout)");
    cls->add_option("linkage", input, "linkage JSON file, or - for stdin");

    auto* gen = app.add_subcommand("generate", "emit a random linkage of a family");
    gen->add_option("family", family, "parallel | linesym | cubic")->required();
    gen->add_option("--seed", seed, "random seed (default 0)");
    gen->add_option("--pairs", pairs_str,
                    "cubic only: a1,b1,a2,b2,a3,b3 as rationals (random axes)");

    auto* rank = app.add_subcommand("rank", "print the lambda-matrix rank");
    rank->add_option("linkage", input, "linkage JSON file, or - for stdin");
    rank->add_option("--mode", mode_str, "exact | tol (default by scalar type)");
    rank->add_option("--tol", tol, "singular value cutoff for --mode tol");
    rank->add_option("--dump-matrix", dump_path, "also write the 48x7 real matrix as CSV");

    auto* trace = app.add_subcommand("trace", "trace the angle-symmetric configuration curve");
    trace->add_option("linkage", input, "linkage JSON file, or - for stdin");
    std::string grid_spec;
    trace->add_option("--grid", grid_spec, "a:b:n  (n values from a to b)")->required();
    trace->add_option("--slice", slice, "sliced variable: t1 | t2 | t3 (default t3)");
    trace->add_option("--tol", tol, "closure residual tolerance");

    auto* poses = app.add_subcommand("poses", "export joint poses for traced configurations");
    poses->add_option("linkage", input, "linkage JSON file, or - for stdin");
    poses->add_option("--configs", configs_path, "configurations JSON file")->required();
    poses->add_option("-o,--output", out_path, "pose file path")->required();

    app.add_subcommand("example1", "emit the built-in parallel-property example");

    CLI11_PARSE(app, argc, argv);
    const auto override_mode = scalar_override();

    if (app.got_subcommand("example1")) {
        std::cout << linkage_to_json(example1_linkage()) << "\n";
        return 0;
    }

    if (app.got_subcommand("generate")) {
        Rng rng(seed);
        if (family == "parallel") {
            std::cout << linkage_to_json(random_parallel(rng).linkage) << "\n";
        } else if (family == "linesym") {
            std::cout << linkage_to_json(random_line_symmetric(rng).linkage) << "\n";
        } else if (family == "cubic") {
            if (pairs_str.empty()) {
                std::cout << linkage_to_json(random_cubic(rng).linkage) << "\n";
            } else {
                std::array<Rational, 6> vals;
                std::stringstream ss(pairs_str);
                std::string tok;
                for (int i = 0; i < 6; ++i) {
                    if (!std::getline(ss, tok, ','))
                        throw InvalidArgument("--pairs needs 6 comma-separated rationals");
                    vals[static_cast<size_t>(i)] = Rational::parse(tok);
                }
                std::array<std::pair<Rational, Rational>, 3> pairs{
                    std::pair<Rational, Rational>{vals[0], vals[1]}, {vals[2], vals[3]}, {vals[4], vals[5]}};
                std::array<Line<Rational>, 3> axes{rng.line(), rng.line(), rng.line()};
                std::cout << linkage_to_json(construct_cubic_type(pairs, axes)) << "\n";
            }
        } else {
            throw InvalidArgument("unknown family: " + family + " (parallel | linesym | cubic)");
        }
        return 0;
    }

    const LinkageDocument doc = parse_linkage_json(read_input(input), override_mode);

    if (app.got_subcommand("classify")) {
        if (doc.mode == ScalarMode::Rational) {
            const auto res = classify(*doc.exact);
            std::cout << classification_to_json(res) << "\n";
            return res.undetermined() ? 2 : 0;
        }
        std::cerr << R"({"warning":"float scalars: classification is advisory; rank uses a tolerance"})"
                  << "\n";
        const auto res = classify(*doc.approx);
        std::cout << classification_to_json(res) << "\n";
        return res.undetermined() ? 2 : 0;
    }

    if (app.got_subcommand("rank")) {
        if (mode_str.empty()) mode_str = doc.mode == ScalarMode::Rational ? "exact" : "tol";
        int r;
        if (mode_str == "exact") {
            const auto M = build_lambda_matrix(doc.as_exact());
            r = lambda_rank_exact(M);
            if (!dump_path.empty()) {
                std::ofstream out(dump_path);
                write_real_form_csv(M, out);
            }
        } else if (mode_str == "tol") {
            const auto M = build_lambda_matrix(doc.as_float());
            r = lambda_rank_tolerance(M, tol);
            if (!dump_path.empty()) {
                std::ofstream out(dump_path);
                write_real_form_csv(M, out);
            }
        } else {
            throw InvalidArgument("--mode must be exact or tol");
        }
        std::cout << r << "\n";
        return 0;
    }

    if (app.got_subcommand("trace")) {
        double a, b;
        int n;
        if (std::sscanf(grid_spec.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 || n < 1)
            throw InvalidArgument("--grid must be a:b:n with n >= 1");
        std::vector<double> grid;
        for (int i = 0; i < n; ++i)
            grid.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
        TraceOptions opt;
        opt.residual_tol = tol;
        if (slice == "t1") opt.slice_var = 1;
        else if (slice == "t2") opt.slice_var = 2;
        else if (slice == "t3") opt.slice_var = 3;
        else throw InvalidArgument("--slice must be t1, t2 or t3");
        const auto configs = trace_configuration_curve(doc.as_float(), grid, opt);
        std::cout << configs_to_json(configs, opt.slice_var) << "\n";
        return 0;
    }

    if (app.got_subcommand("poses")) {
        const auto configs = configs_from_json(read_input(configs_path));
        std::ofstream out(out_path);
        if (!out) throw InvalidArgument("cannot open output file: " + out_path);
        export_poses(doc.as_float(), configs, out);
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    const auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            if (c == '\n') { out += "\\n"; continue; }
            out += c;
        }
        return out;
    };
    const auto fail = [&](int code, const char* kind, const std::string& what) {
        std::cerr << "{\"error\":\"" << kind << "\",\"detail\":\"" << escape(what) << "\"}\n";
        return code;
    };
    try {
        return run(argc, argv);
    } catch (const JsonError& e) {
        return fail(3, "malformed-json", e.what());
    } catch (const InvalidArgument& e) {
        return fail(4, "invalid-input", e.what());
    } catch (const Error& e) {
        return fail(5, "numeric", e.what());
    } catch (const std::exception& e) {
        return fail(5, "internal", e.what());
    }
}
