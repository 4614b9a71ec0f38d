#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace udc {

/// Closed axis-aligned box [lower, upper] in R^n.
struct AxisBox {
    std::vector<double> lower;
    std::vector<double> upper;

    AxisBox() = default;
    AxisBox(std::vector<double> lo, std::vector<double> hi);

    static AxisBox unit(int n);
    static AxisBox cube(std::span<const double> corner, double side);

    int dimension() const noexcept { return static_cast<int>(lower.size()); }
    double width(int i) const noexcept { return upper[i] - lower[i]; }
    double max_width() const noexcept;
    double volume() const noexcept;
    bool contains(std::span<const double> x) const noexcept;
    bool contains(const AxisBox& inner) const noexcept;
    /// True when the boxes share a set of positive measure.
    bool overlaps(const AxisBox& other) const noexcept;
    std::vector<double> center() const;
    /// Corner selected by the low n bits of `mask` (bit i set -> upper_i).
    std::vector<double> corner(unsigned mask) const;
};

/// Dyadic cube C_{k,v} = 2^-k ([0,1]^n + v).
struct Cube {
    int k = 0;
    std::vector<std::int64_t> v;

    int dimension() const noexcept { return static_cast<int>(v.size()); }
    Cube parent() const;
    Cube child(unsigned mask) const;
    double side() const;
    friend bool operator==(const Cube&, const Cube&) = default;
    friend auto operator<=>(const Cube&, const Cube&) = default;
};

AxisBox cube_box(const Cube& c);

/// floor(2^k x) as an integer; the half-open cube index of x at level k.
std::int64_t dyadic_index(double x, int k);

/// floor(-log2(max width)) - 1: the coarsest level at which a cube can fit
/// inside a set with this bounding box.
int start_level(const AxisBox& bounding_box);

/// Level-k cubes whose closures meet the box.
std::vector<Cube> covering_cubes(const AxisBox& box, int k);

}  // namespace udc
