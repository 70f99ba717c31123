#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hexalink/classify.hpp"
#include "hexalink/linkage.hpp"

namespace hexalink {

// Malformed document (bad JSON, missing fields, wrong types). Distinct from
// InvalidArgument, which covers well-formed documents with broken invariants.
class JsonError : public Error {
public:
    explicit JsonError(const std::string& msg) : Error(msg) {}
};

enum class ScalarMode { Rational, Float };

/// A linkage as it came off the wire: exactly one of the two scalar
/// realizations is populated, matching the document's "scalar" field.
struct LinkageDocument {
    ScalarMode mode = ScalarMode::Rational;
    std::optional<Linkage<Rational>> exact;
    std::optional<Linkage<double>> approx;

    Linkage<double> as_float() const;
    /// Exact view; float documents are lifted by rationalizing coordinates.
    Linkage<Rational> as_exact() const;
};

/// Parses `{"scalar": "rational"|"float", "joints": [{"primal": [...],
/// "dual": [...]}, x6]}`; rational coordinates are strings "p/q", float
/// coordinates are numbers. An optional mode override re-targets the
/// document before validation.
LinkageDocument parse_linkage_json(const std::string& text,
                                   std::optional<ScalarMode> override_mode = std::nullopt);

std::string linkage_to_json(const Linkage<Rational>& L);
std::string linkage_to_json(const Linkage<double>& L);

std::string classification_to_json(const ClassificationResult<Rational>& res);
std::string classification_to_json(const ClassificationResult<double>& res);

/// Configurations document: `{"slice": "t1"|"t2"|"t3", "configs": [[t1, t2,
/// t3], ...]}`; infinite parameters are the string "inf".
std::string configs_to_json(const std::vector<SymConfiguration<double>>& configs, int slice_var);
std::vector<SymConfiguration<double>> configs_from_json(const std::string& text);

} // namespace hexalink
