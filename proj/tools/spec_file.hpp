#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "udc/densities.hpp"
#include "udc/regions.hpp"

namespace udc::cli {

/// Malformed distribution spec or invalid command arguments (exit code 2).
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RegionSpec {
    std::string shape;  // "box" | "ellipsoid"
    std::vector<double> lower, upper;            // box
    std::vector<std::vector<double>> matrix;     // ellipsoid
    std::vector<double> center;                  // ellipsoid, defaults to the origin

    friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

/// A built-in family with its parameters, read from a JSON document:
///   {"family": "bell_unit", "params": {"theta": 0.5}}
///   {"family": "uniform_region", "region": {"shape": "ellipsoid", "matrix": [[..],[..]]}}
struct DistributionSpec {
    std::string family;
    std::map<std::string, double> params;
    std::optional<RegionSpec> region;

    friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;
};

/// Throws SpecError with a line/column or field diagnostic.
DistributionSpec parse_spec(const std::string& text);
DistributionSpec load_spec(const std::string& path);
std::string serialize_spec(const DistributionSpec& spec);

std::shared_ptr<const Region> make_region(const RegionSpec& spec);
std::shared_ptr<const Density> make_density(const DistributionSpec& spec);

}  // namespace udc::cli
