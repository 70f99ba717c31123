#include "hexalink/json_io.hpp"

#include <cmath>

#include "json.hpp"

namespace hexalink {

using nlohmann::json;

Linkage<double> LinkageDocument::as_float() const {
    if (approx) return *approx;
    return to_float(*exact);
}

Linkage<Rational> LinkageDocument::as_exact() const {
    if (exact) return *exact;
    const auto& L = *approx;
    return Linkage<Rational>::from_lines({exactify(L.joint(0)), exactify(L.joint(1)),
                                          exactify(L.joint(2)), exactify(L.joint(3)),
                                          exactify(L.joint(4)), exactify(L.joint(5))});
}

namespace {

json parse_or_throw(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw JsonError("malformed JSON");
    return doc;
}

Rational rational_coord(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long long>(v.get<int64_t>()));
    if (v.is_number()) return Rational::from_double(v.get<double>());
    throw JsonError("rational coordinate must be a \"p/q\" string or a number");
}

double float_coord(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return Rational::parse(v.get<std::string>()).to_double();
    throw JsonError("float coordinate must be a number");
}

template <class S, class CoordFn>
Linkage<S> linkage_from_doc(const json& doc, CoordFn coord) {
    if (!doc.is_object() || !doc.contains("joints")) throw JsonError("missing \"joints\"");
    const json& joints = doc["joints"];
    if (!joints.is_array() || joints.size() != 6) throw JsonError("\"joints\" must be an array of 6");
    std::vector<Line<S>> lines;
    for (const json& j : joints) {
        if (!j.is_object() || !j.contains("primal") || !j.contains("dual"))
            throw JsonError("joint must have \"primal\" and \"dual\"");
        const json& p = j["primal"];
        const json& d = j["dual"];
        if (!p.is_array() || p.size() != 3 || !d.is_array() || d.size() != 3)
            throw JsonError("joint \"primal\"/\"dual\" must be arrays of 3");
        typename DualQuaternion<S>::Coords c;
        c.fill(scalar_traits<S>::zero());
        for (int i = 0; i < 3; ++i) {
            c[static_cast<size_t>(i) + 1] = coord(p[static_cast<size_t>(i)]);
            c[static_cast<size_t>(i) + 5] = coord(d[static_cast<size_t>(i)]);
        }
        lines.push_back(Line<S>::from_dq(DualQuaternion<S>(c)));
    }
    return Linkage<S>::from_lines({lines[0], lines[1], lines[2], lines[3], lines[4], lines[5]});
}

} // namespace

LinkageDocument parse_linkage_json(const std::string& text, std::optional<ScalarMode> override_mode) {
    const json doc = parse_or_throw(text);
    if (!doc.is_object()) throw JsonError("linkage document must be an object");

    ScalarMode mode;
    if (override_mode) {
        mode = *override_mode;
    } else {
        if (!doc.contains("scalar") || !doc["scalar"].is_string())
            throw JsonError("missing \"scalar\" (\"rational\" or \"float\")");
        const std::string s = doc["scalar"].get<std::string>();
        if (s == "rational") mode = ScalarMode::Rational;
        else if (s == "float") mode = ScalarMode::Float;
        else throw JsonError("\"scalar\" must be \"rational\" or \"float\"");
    }

    LinkageDocument out;
    out.mode = mode;
    if (mode == ScalarMode::Rational)
        out.exact = linkage_from_doc<Rational>(doc, rational_coord);
    else
        out.approx = linkage_from_doc<double>(doc, float_coord);
    return out;
}

namespace {

template <class S, class CoordOut>
json linkage_doc(const Linkage<S>& L, const char* scalar_name, CoordOut out) {
    json joints = json::array();
    for (int i = 0; i < 6; ++i) {
        const auto d = L.joint(i).direction();
        const auto m = L.joint(i).moment();
        joints.push_back(json{{"primal", {out(d[0]), out(d[1]), out(d[2])}},
                              {"dual", {out(m[0]), out(m[1]), out(m[2])}}});
    }
    return json{{"scalar", scalar_name}, {"joints", joints}};
}

} // namespace

std::string linkage_to_json(const Linkage<Rational>& L) {
    return linkage_doc(L, "rational", [](const Rational& r) { return json(r.str()); }).dump();
}

std::string linkage_to_json(const Linkage<double>& L) {
    return linkage_doc(L, "float", [](double x) { return json(x); }).dump();
}

namespace {

json pairing_json(const ParallelPairing& p) {
    json pairs = json::array();
    for (const auto& [a, b] : p.pairs) pairs.push_back(json::array({a, b}));
    return json{{"shift", p.shift}, {"pairs", pairs}};
}

template <class S, class CoordOut>
json family_json(const Family<S>& family, CoordOut out) {
    json j;
    if (const auto* ls = std::get_if<LineSymmetricFamily<S>>(&family)) {
        const auto d = ls->axis.direction();
        const auto m = ls->axis.moment();
        j["family"] = "LineSymmetric";
        j["data"] = {{"axis", {{"primal", {out(d[0]), out(d[1]), out(d[2])}},
                               {"dual", {out(m[0]), out(m[1]), out(m[2])}}}}};
    } else if (const auto* pp = std::get_if<ParallelPropertyFamily>(&family)) {
        j["family"] = "ParallelProperty";
        j["data"] = pairing_json(pp->pairing);
    } else if (const auto* ct = std::get_if<CubicTypeFamily<S>>(&family)) {
        j["family"] = "CubicPolynomialType";
        json pairs = json::array();
        for (const auto& [a, b] : ct->pairs) pairs.push_back(json::array({out(a), out(b)}));
        j["data"] = {{"pairs", pairs}};
    } else {
        j["family"] = "Undetermined";
        j["data"] = {{"reason", std::get<UndeterminedFamily>(family).reason}};
    }
    return j;
}

} // namespace

std::string classification_to_json(const ClassificationResult<Rational>& res) {
    json j = family_json<Rational>(res.family, [](const Rational& r) { return json(r.str()); });
    j["rank"] = res.rank;
    return j.dump();
}

std::string classification_to_json(const ClassificationResult<double>& res) {
    json j = family_json<double>(res.family, [](double x) { return json(x); });
    j["rank"] = res.rank;
    return j.dump();
}

namespace {

json param_json(const ConfigParam<double>& t) {
    if (t.is_infinite()) return json("inf");
    return json(t.value());
}

ConfigParam<double> param_from_json(const json& v) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf" || s == "-inf") return ConfigParam<double>::infinity();
        throw JsonError("configuration entry string must be \"inf\"");
    }
    if (!v.is_number()) throw JsonError("configuration entry must be a number or \"inf\"");
    return ConfigParam<double>::finite(v.get<double>());
}

} // namespace

std::string configs_to_json(const std::vector<SymConfiguration<double>>& configs, int slice_var) {
    json arr = json::array();
    for (const auto& c : configs)
        arr.push_back(json::array({param_json(c.t[0]), param_json(c.t[1]), param_json(c.t[2])}));
    return json{{"slice", "t" + std::to_string(slice_var)}, {"configs", arr}}.dump();
}

std::vector<SymConfiguration<double>> configs_from_json(const std::string& text) {
    const json doc = parse_or_throw(text);
    if (!doc.is_object() || !doc.contains("configs") || !doc["configs"].is_array())
        throw JsonError("configurations document must contain a \"configs\" array");
    std::vector<SymConfiguration<double>> out;
    for (const json& c : doc["configs"]) {
        if (!c.is_array() || c.size() != 3)
            throw JsonError("each configuration must be an array [t1, t2, t3]");
        out.push_back(SymConfiguration<double>::of(param_from_json(c[0]), param_from_json(c[1]),
                                                   param_from_json(c[2])));
    }
    return out;
}

} // namespace hexalink
