#include "heatbie/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "heatbie/errors.hpp"

namespace heatbie {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
}

void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

const json& required(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError(where + ": missing required key '" + key + "'");
    return *it;
}

double as_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(where + ": expected a finite number");
    return v;
}

std::size_t as_count(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 1)
        throw ConfigError(where + ": expected a positive integer");
    return j.get<std::size_t>();
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw ConfigError(where + ": expected a string");
    return j.get<std::string>();
}

Vec2 as_point(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ConfigError(where + ": expected [x, y]");
    return {as_number(j[0], where + "[0]"), as_number(j[1], where + "[1]")};
}

std::vector<double> as_numbers(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + ": expected an array of numbers");
    std::vector<double> out;
    for (std::size_t n = 0; n < j.size(); ++n)
        out.push_back(as_number(j[n], where + "[" + std::to_string(n) + "]"));
    return out;
}

TrigSeries parse_series(const json& j, const std::string& where) {
    require_object(j, where);
    reject_unknown_keys(j, where, {"cos", "sin"});
    TrigSeries s;
    if (j.contains("cos")) s.cos_coeffs = as_numbers(j["cos"], where + ".cos");
    if (j.contains("sin")) s.sin_coeffs = as_numbers(j["sin"], where + ".sin");
    return s;
}

CurveSpec parse_curve(const json& j) {
    const std::string where = "curve";
    require_object(j, where);
    const std::string type = as_string(required(j, "type", where), where + ".type");
    CurveSpec c;
    if (type == "circle") {
        reject_unknown_keys(j, where, {"type", "radius", "center"});
        c.kind = CurveSpec::Kind::circle;
        if (j.contains("radius")) c.radius = as_number(j["radius"], where + ".radius");
        if (j.contains("center")) c.center = as_point(j["center"], where + ".center");
    } else if (type == "trig") {
        reject_unknown_keys(j, where, {"type", "x", "y"});
        c.kind = CurveSpec::Kind::trig;
        c.x = parse_series(required(j, "x", where), where + ".x");
        c.y = parse_series(required(j, "y", where), where + ".y");
    } else {
        throw ConfigError("curve.type: unknown curve '" + type + "' (expected circle|trig)");
    }
    return c;
}

DataSpec parse_data(const json& j) {
    const std::string where = "data";
    require_object(j, where);
    const std::string type = as_string(required(j, "type", where), where + ".type");
    DataSpec d;
    if (type == "point_source") {
        reject_unknown_keys(j, where, {"type", "x0"});
        d.kind = DataSpec::Kind::point_source;
        d.x0 = as_point(required(j, "x0", where), where + ".x0");
    } else if (type == "paper_example") {
        reject_unknown_keys(j, where, {"type"});
        d.kind = DataSpec::Kind::paper_example;
        d.x0 = {};
    } else if (type == "zero") {
        reject_unknown_keys(j, where, {"type"});
        d.kind = DataSpec::Kind::zero;
        d.x0 = {};
    } else {
        throw ConfigError("data.type: unknown generator '" + type +
                          "' (expected point_source|paper_example|zero)");
    }
    return d;
}

ReferenceSpec parse_reference(const json& j) {
    const std::string where = "reference";
    require_object(j, where);
    reject_unknown_keys(j, where, {"type", "x0"});
    const std::string type = as_string(required(j, "type", where), where + ".type");
    if (type != "point_source")
        throw ConfigError("reference.type: unknown reference '" + type + "' (expected point_source)");
    return {as_point(required(j, "x0", where), where + ".x0")};
}

OutputSpec parse_output(const json& j) {
    const std::string where = "output";
    require_object(j, where);
    reject_unknown_keys(j, where, {"flux", "field", "report"});
    OutputSpec o;
    if (j.contains("flux")) o.flux = as_string(j["flux"], where + ".flux");
    if (j.contains("field")) o.field = as_string(j["field"], where + ".field");
    if (j.contains("report")) o.report = as_string(j["report"], where + ".report");
    return o;
}

std::vector<SpaceTimePoint> parse_targets(const json& j) {
    if (!j.is_array()) throw ConfigError("targets: expected an array of [x, y, t]");
    std::vector<SpaceTimePoint> out;
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string where = "targets[" + std::to_string(n) + "]";
        const json& e = j[n];
        if (!e.is_array() || e.size() != 3) throw ConfigError(where + ": expected [x, y, t]");
        out.push_back({{as_number(e[0], where), as_number(e[1], where)}, as_number(e[2], where)});
    }
    return out;
}

json series_to_json(const TrigSeries& s) { return {{"cos", s.cos_coeffs}, {"sin", s.sin_coeffs}}; }

json point_to_json(Vec2 p) { return json::array({p.x, p.y}); }

}  // namespace

BoundaryCurve CurveSpec::build() const {
    if (kind == Kind::circle) return BoundaryCurve::circle(radius, center);
    return BoundaryCurve::trig_polynomial(x, y);
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    auto same_targets = [](const std::vector<SpaceTimePoint>& p, const std::vector<SpaceTimePoint>& q) {
        if (p.size() != q.size()) return false;
        for (std::size_t n = 0; n < p.size(); ++n)
            if (!(p[n].point == q[n].point) || p[n].time != q[n].time) return false;
        return true;
    };
    return a.curve == b.curve && a.n_space == b.n_space && a.n_time == b.n_time &&
           a.final_time == b.final_time && a.zeta_max == b.zeta_max &&
           a.kernel_mode == b.kernel_mode && a.data == b.data && a.reference == b.reference &&
           a.output == b.output && same_targets(a.targets, b.targets) && a.field_flux == b.field_flux;
}

void ExperimentConfig::validate() const {
    if (n_space < 1) throw ConfigError("N must be at least 1");
    if (n_time < 1) throw ConfigError("Nprime must be at least 1");
    if (!(final_time > 0.0) || !std::isfinite(final_time)) throw ConfigError("T must be positive");
    if (!(zeta_max > 0.0 && zeta_max <= 1.0)) throw ConfigError("zeta_max must lie in (0, 1]");
    if (curve.kind == CurveSpec::Kind::circle && !(curve.radius > 0.0))
        throw ConfigError("curve.radius must be positive");
    if (field_flux == FieldFlux::reference && !reference)
        throw ConfigError("field_flux = reference needs a reference spec");
    for (const auto& t : targets)
        if (!(t.time > 0.0 && t.time <= final_time))
            throw ConfigError("targets: times must lie in (0, T]");
}

ExperimentConfig parse_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    require_object(j, "config");
    reject_unknown_keys(j, "config",
                        {"curve", "N", "Nprime", "T", "zeta_max", "kernel_mode", "data", "reference",
                         "output", "targets", "field_flux"});

    ExperimentConfig c;
    c.curve = parse_curve(required(j, "curve", "config"));
    c.n_space = as_count(required(j, "N", "config"), "N");
    c.n_time = as_count(required(j, "Nprime", "config"), "Nprime");
    c.final_time = as_number(required(j, "T", "config"), "T");
    if (j.contains("zeta_max")) c.zeta_max = as_number(j["zeta_max"], "zeta_max");
    if (j.contains("kernel_mode")) {
        const std::string mode = as_string(j["kernel_mode"], "kernel_mode");
        try {
            c.kernel_mode = parse_kernel_mode(mode.c_str());
        } catch (const InvalidParameter& e) {
            throw ConfigError(std::string("kernel_mode: ") + e.what());
        }
    }
    c.data = parse_data(required(j, "data", "config"));
    if (j.contains("reference") && !j["reference"].is_null()) c.reference = parse_reference(j["reference"]);
    if (j.contains("output")) c.output = parse_output(j["output"]);
    if (j.contains("targets")) c.targets = parse_targets(j["targets"]);
    if (j.contains("field_flux")) {
        const std::string ff = as_string(j["field_flux"], "field_flux");
        if (ff == "reconstructed") c.field_flux = FieldFlux::reconstructed;
        else if (ff == "reference") c.field_flux = FieldFlux::reference;
        else throw ConfigError("field_flux: expected reconstructed|reference");
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& c) {
    json j;
    if (c.curve.kind == CurveSpec::Kind::circle) {
        j["curve"] = {{"type", "circle"}, {"radius", c.curve.radius}, {"center", point_to_json(c.curve.center)}};
    } else {
        j["curve"] = {{"type", "trig"}, {"x", series_to_json(c.curve.x)}, {"y", series_to_json(c.curve.y)}};
    }
    j["N"] = c.n_space;
    j["Nprime"] = c.n_time;
    j["T"] = c.final_time;
    j["zeta_max"] = c.zeta_max;
    j["kernel_mode"] = to_string(c.kernel_mode);
    switch (c.data.kind) {
        case DataSpec::Kind::point_source:
            j["data"] = {{"type", "point_source"}, {"x0", point_to_json(c.data.x0)}};
            break;
        case DataSpec::Kind::paper_example: j["data"] = {{"type", "paper_example"}}; break;
        case DataSpec::Kind::zero: j["data"] = {{"type", "zero"}}; break;
    }
    if (c.reference) j["reference"] = {{"type", "point_source"}, {"x0", point_to_json(c.reference->x0)}};
    json out = json::object();
    if (!c.output.flux.empty()) out["flux"] = c.output.flux;
    if (!c.output.field.empty()) out["field"] = c.output.field;
    if (!c.output.report.empty()) out["report"] = c.output.report;
    j["output"] = out;
    json targets = json::array();
    for (const auto& t : c.targets) targets.push_back({t.point.x, t.point.y, t.time});
    j["targets"] = targets;
    j["field_flux"] = c.field_flux == FieldFlux::reference ? "reference" : "reconstructed";
    return j.dump(2) + "\n";
}

}  // namespace heatbie
