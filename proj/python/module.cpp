#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hexalink/classify.hpp"
#include "hexalink/example1.hpp"
#include "hexalink/generate.hpp"
#include "hexalink/json_io.hpp"
#include "hexalink/sampler.hpp"

namespace py = pybind11;
using namespace hexalink;

namespace {

std::optional<ScalarMode> mode_from(const std::string& scalar) {
    if (scalar.empty()) return std::nullopt;
    if (scalar == "rational") return ScalarMode::Rational;
    if (scalar == "float") return ScalarMode::Float;
    throw InvalidArgument("scalar must be \"rational\" or \"float\"");
}

std::string classify_json(const std::string& linkage_json, const std::string& scalar) {
    const auto doc = parse_linkage_json(linkage_json, mode_from(scalar));
    if (doc.mode == ScalarMode::Rational) return classification_to_json(classify(*doc.exact));
    return classification_to_json(classify(*doc.approx));
}

int rank_json(const std::string& linkage_json, const std::string& mode, double tol) {
    const auto doc = parse_linkage_json(linkage_json);
    const std::string m = mode.empty() ? (doc.mode == ScalarMode::Rational ? "exact" : "tol") : mode;
    if (m == "exact") return lambda_rank_exact(build_lambda_matrix(doc.as_exact()));
    if (m == "tol") return lambda_rank_tolerance(build_lambda_matrix(doc.as_float()), tol);
    throw InvalidArgument("mode must be \"exact\" or \"tol\"");
}

std::string generate_json(const std::string& family, uint64_t seed) {
    Rng rng(seed);
    if (family == "parallel") return linkage_to_json(random_parallel(rng).linkage);
    if (family == "linesym") return linkage_to_json(random_line_symmetric(rng).linkage);
    if (family == "cubic") return linkage_to_json(random_cubic(rng).linkage);
    throw InvalidArgument("family must be parallel, linesym or cubic");
}

std::string trace_json(const std::string& linkage_json, double start, double stop, int count,
                       int slice_var, double tol) {
    const auto doc = parse_linkage_json(linkage_json);
    std::vector<double> grid;
    for (int i = 0; i < count; ++i)
        grid.push_back(count == 1 ? start : start + (stop - start) * static_cast<double>(i) / (count - 1));
    TraceOptions opt;
    opt.slice_var = slice_var;
    opt.residual_tol = tol;
    return configs_to_json(trace_configuration_curve(doc.as_float(), grid, opt), slice_var);
}

std::string poses_text(const std::string& linkage_json, const std::string& configs_json) {
    const auto doc = parse_linkage_json(linkage_json);
    std::ostringstream os;
    export_poses(doc.as_float(), configs_from_json(configs_json), os);
    return os.str();
}

std::string closure_residual_json(const std::string& linkage_json, double t1, double t2, double t3) {
    const auto doc = parse_linkage_json(linkage_json);
    const auto tau = SymConfiguration<double>::of(ConfigParam<double>::finite(t1),
                                                  ConfigParam<double>::finite(t2),
                                                  ConfigParam<double>::finite(t3));
    const auto rep = closure_residual(doc.as_float(), tau);
    std::ostringstream os;
    os << "{\"residual\":" << rep.residual << ",\"lambda_sign\":"
       << (rep.lambda_sign ? std::to_string(*rep.lambda_sign) : "null") << "}";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_hexalink, m) {
    m.doc() = "angle-symmetric 6R linkages: classification, synthesis, curve tracing";

    // Base first: translators run newest-first, so the derived classes must
    // be registered after their base to win.
    auto base = py::register_exception<Error>(m, "HexalinkError");
    py::register_exception<InvalidArgument>(m, "InvalidInput", base.ptr());
    py::register_exception<JsonError>(m, "JsonError", base.ptr());

    m.def("example1", [] { return linkage_to_json(example1_linkage()); },
          "Built-in parallel-property linkage as linkage JSON.");
    m.def("classify", &classify_json, py::arg("linkage_json"), py::arg("scalar") = "",
          "Classify a linkage; returns classification JSON.");
    m.def("rank", &rank_json, py::arg("linkage_json"), py::arg("mode") = "",
          py::arg("tol") = kFloatTolerance, "Rank of the 48x7 realified closure matrix.");
    m.def("generate", &generate_json, py::arg("family"), py::arg("seed") = 0,
          "Random linkage of a family: parallel | linesym | cubic.");
    m.def("trace", &trace_json, py::arg("linkage_json"), py::arg("start"), py::arg("stop"),
          py::arg("count"), py::arg("slice_var") = 3, py::arg("tol") = 1e-9,
          "Trace the angle-symmetric configuration curve; returns configurations JSON.");
    m.def("poses", &poses_text, py::arg("linkage_json"), py::arg("configs_json"),
          "Pose file content for the given configurations.");
    m.def("closure_residual", &closure_residual_json, py::arg("linkage_json"), py::arg("t1"),
          py::arg("t2"), py::arg("t3"),
          "Closure residual and sign at a symmetric configuration (floats).");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
