#include "spec_file.hpp"

#include <set>

#include <json.hpp>

#include "io.hpp"
#include "udc/errors.hpp"

namespace udc::cli {

namespace {

using nlohmann::json;

const std::map<std::string, std::set<std::string>> kFamilyParams = {
    {"gaussian1d", {}},
    {"shifted_exponential", {"a"}},
    {"bell_unit", {"theta"}},
    {"bell_cosine", {"theta", "y_a"}},
    {"uniform_region", {}},
};

[[noreturn]] void field_error(const std::string& field, const std::string& message) {
    throw SpecError("spec field '" + field + "': " + message);
}

std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double number_at(const json& j, const std::string& field) {
    if (!j.is_number()) {
        field_error(field, "expected a number");
    }
    return j.get<double>();
}

std::vector<double> vector_at(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) {
        field_error(field, "expected a non-empty array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(number_at(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.contains(key)) {
            field_error(prefix + key, "unknown field");
        }
    }
}

RegionSpec parse_region(const json& j) {
    if (!j.is_object()) {
        field_error("region", "expected an object");
    }
    if (!j.contains("shape") || !j["shape"].is_string()) {
        field_error("region.shape", "expected \"box\" or \"ellipsoid\"");
    }
    RegionSpec r;
    r.shape = j["shape"].get<std::string>();
    if (r.shape == "box") {
        reject_unknown(j, {"shape", "lower", "upper"}, "region.");
        if (!j.contains("lower")) {
            field_error("region.lower", "missing");
        }
        if (!j.contains("upper")) {
            field_error("region.upper", "missing");
        }
        r.lower = vector_at(j["lower"], "region.lower");
        r.upper = vector_at(j["upper"], "region.upper");
        if (r.lower.size() != r.upper.size()) {
            field_error("region.upper", "dimension differs from region.lower");
        }
    } else if (r.shape == "ellipsoid") {
        reject_unknown(j, {"shape", "matrix", "center"}, "region.");
        if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].empty()) {
            field_error("region.matrix", "expected a square array of rows");
        }
        const json& m = j["matrix"];
        for (std::size_t i = 0; i < m.size(); ++i) {
            r.matrix.push_back(vector_at(m[i], "region.matrix[" + std::to_string(i) + "]"));
            if (r.matrix.back().size() != m.size()) {
                field_error("region.matrix[" + std::to_string(i) + "]", "row length differs from the row count");
            }
        }
        if (j.contains("center")) {
            r.center = vector_at(j["center"], "region.center");
            if (r.center.size() != r.matrix.size()) {
                field_error("region.center", "dimension differs from region.matrix");
            }
        }
    } else {
        field_error("region.shape", "unknown shape '" + r.shape + "' (expected box or ellipsoid)");
    }
    return r;
}

json region_json(const RegionSpec& r) {
    json j;
    j["shape"] = r.shape;
    if (r.shape == "box") {
        j["lower"] = r.lower;
        j["upper"] = r.upper;
    } else {
        j["matrix"] = r.matrix;
        if (!r.center.empty()) {
            j["center"] = r.center;
        }
    }
    return j;
}

}  // namespace

DistributionSpec parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw SpecError("spec is not valid JSON at " + line_column(text, byte) + ": " + e.what());
    }
    if (!j.is_object()) {
        throw SpecError("spec must be a JSON object");
    }
    reject_unknown(j, {"family", "params", "region"}, "");
    if (!j.contains("family") || !j["family"].is_string()) {
        field_error("family", "missing or not a string");
    }
    DistributionSpec spec;
    spec.family = j["family"].get<std::string>();
    const auto family = kFamilyParams.find(spec.family);
    if (family == kFamilyParams.end()) {
        field_error("family", "unknown family '" + spec.family +
                                  "' (expected uniform_region, gaussian1d, shifted_exponential, bell_unit or "
                                  "bell_cosine)");
    }
    if (j.contains("params")) {
        if (!j["params"].is_object()) {
            field_error("params", "expected an object of named numbers");
        }
        for (const auto& [key, value] : j["params"].items()) {
            if (!family->second.contains(key)) {
                field_error("params." + key, "not a parameter of " + spec.family);
            }
            spec.params[key] = number_at(value, "params." + key);
        }
    }
    for (const std::string& name : family->second) {
        if (!spec.params.contains(name)) {
            field_error("params." + name, "missing (required by " + spec.family + ")");
        }
    }
    if (spec.family == "uniform_region") {
        if (!j.contains("region")) {
            field_error("region", "missing (required by uniform_region)");
        }
        spec.region = parse_region(j["region"]);
    } else if (j.contains("region")) {
        field_error("region", "only uniform_region takes a region");
    }
    if (spec.family == "bell_cosine") {
        const double y = spec.params["y_a"];
        if (y != 1.0 && y != -1.0) {
            field_error("params.y_a", "must be +1 or -1");
        }
    }
    if (spec.family == "shifted_exponential" && !(spec.params["a"] >= 0.0)) {
        field_error("params.a", "must be >= 0");
    }
    if (spec.family == "bell_unit" && !(spec.params["theta"] >= 0.0 && spec.params["theta"] < 1.0)) {
        field_error("params.theta", "must lie in [0, 1)");
    }
    return spec;
}

DistributionSpec load_spec(const std::string& path) {
    return parse_spec(read_text_file(path));
}

std::string serialize_spec(const DistributionSpec& spec) {
    json j;
    j["family"] = spec.family;
    if (!spec.params.empty()) {
        j["params"] = spec.params;
    }
    if (spec.region) {
        j["region"] = region_json(*spec.region);
    }
    return j.dump(2) + "\n";
}

std::shared_ptr<const Region> make_region(const RegionSpec& spec) {
    try {
        if (spec.shape == "box") {
            return std::make_shared<BoxRegion>(AxisBox(spec.lower, spec.upper));
        }
        std::vector<double> k;
        for (const auto& row : spec.matrix) {
            k.insert(k.end(), row.begin(), row.end());
        }
        if (spec.center.empty()) {
            return std::make_shared<EllipsoidRegion>(std::move(k));
        }
        return std::make_shared<EllipsoidRegion>(std::move(k), spec.center);
    } catch (const DomainError& e) {
        throw SpecError(std::string("spec field 'region': ") + e.what());
    }
}

std::shared_ptr<const Density> make_density(const DistributionSpec& spec) {
    try {
        if (spec.family == "gaussian1d") {
            return std::make_shared<Gaussian1d>();
        }
        if (spec.family == "shifted_exponential") {
            return std::make_shared<ShiftedExponential>(spec.params.at("a"));
        }
        if (spec.family == "bell_unit") {
            return std::make_shared<BellUnit>(spec.params.at("theta"));
        }
        if (spec.family == "bell_cosine") {
            return std::make_shared<BellCosine>(spec.params.at("theta"), static_cast<int>(spec.params.at("y_a")));
        }
        return std::make_shared<UniformOn>(make_region(*spec.region));
    } catch (const DomainError& e) {
        throw SpecError(std::string("spec: ") + e.what());
    }
}

}  // namespace udc::cli
