#include <algorithm>
#include <cmath>
#include <limits>

#include "udc/errors.hpp"
#include "udc/geometry.hpp"

namespace udc {

AxisBox::AxisBox(std::vector<double> lo, std::vector<double> hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size()) {
        throw DomainError("box bounds have mismatched dimensions");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(lower[i] <= upper[i])) {
            throw DomainError("box lower bound exceeds upper bound");
        }
    }
}

AxisBox AxisBox::unit(int n) {
    return AxisBox(std::vector<double>(n, 0.0), std::vector<double>(n, 1.0));
}

AxisBox AxisBox::cube(std::span<const double> corner, double side) {
    std::vector<double> hi(corner.begin(), corner.end());
    for (double& h : hi) {
        h += side;
    }
    return AxisBox(std::vector<double>(corner.begin(), corner.end()), std::move(hi));
}

double AxisBox::max_width() const noexcept {
    double w = 0.0;
    for (int i = 0; i < dimension(); ++i) {
        w = std::max(w, width(i));
    }
    return w;
}

double AxisBox::volume() const noexcept {
    double v = 1.0;
    for (int i = 0; i < dimension(); ++i) {
        v *= width(i);
    }
    return v;
}

bool AxisBox::contains(std::span<const double> x) const noexcept {
    for (int i = 0; i < dimension(); ++i) {
        if (x[i] < lower[i] || x[i] > upper[i]) {
            return false;
        }
    }
    return true;
}

bool AxisBox::contains(const AxisBox& inner) const noexcept {
    for (int i = 0; i < dimension(); ++i) {
        if (inner.lower[i] < lower[i] || inner.upper[i] > upper[i]) {
            return false;
        }
    }
    return true;
}

bool AxisBox::overlaps(const AxisBox& other) const noexcept {
    for (int i = 0; i < dimension(); ++i) {
        if (std::min(upper[i], other.upper[i]) <= std::max(lower[i], other.lower[i])) {
            return false;
        }
    }
    return true;
}

std::vector<double> AxisBox::center() const {
    std::vector<double> c(lower.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = 0.5 * (lower[i] + upper[i]);
    }
    return c;
}

std::vector<double> AxisBox::corner(unsigned mask) const {
    std::vector<double> c(lower.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = (mask >> i) & 1u ? upper[i] : lower[i];
    }
    return c;
}

Cube Cube::parent() const {
    Cube p{k - 1, v};
    for (auto& x : p.v) {
        // floor division by 2 for negative indices
        x = x >> 1;
    }
    return p;
}

Cube Cube::child(unsigned mask) const {
    Cube c{k + 1, v};
    for (std::size_t i = 0; i < c.v.size(); ++i) {
        c.v[i] = 2 * c.v[i] + ((mask >> i) & 1u);
    }
    return c;
}

double Cube::side() const {
    return std::ldexp(1.0, -k);
}

AxisBox cube_box(const Cube& c) {
    const int n = c.dimension();
    std::vector<double> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = std::ldexp(static_cast<double>(c.v[i]), -c.k);
        hi[i] = std::ldexp(static_cast<double>(c.v[i] + 1), -c.k);
    }
    AxisBox box;
    box.lower = std::move(lo);
    box.upper = std::move(hi);
    return box;
}

std::int64_t dyadic_index(double x, int k) {
    const double scaled = std::floor(std::ldexp(x, k));
    if (!(std::abs(scaled) < 0x1.0p62)) {
        throw DomainError("dyadic index out of range");
    }
    return static_cast<std::int64_t>(scaled);
}

int start_level(const AxisBox& bounding_box) {
    const double w = bounding_box.max_width();
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw DomainError("bounding box must be bounded with positive width");
    }
    return static_cast<int>(std::floor(-std::log2(w))) - 1;
}

std::vector<Cube> covering_cubes(const AxisBox& box, int k) {
    const int n = box.dimension();
    std::vector<std::int64_t> lo(n), hi(n);
    std::size_t count = 1;
    for (int i = 0; i < n; ++i) {
        lo[i] = dyadic_index(box.lower[i], k);
        hi[i] = dyadic_index(box.upper[i], k);
        // an upper bound on a grid line only touches the next cube on a face
        if (hi[i] > lo[i] && std::ldexp(static_cast<double>(hi[i]), -k) == box.upper[i]) {
            --hi[i];
        }
        count *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
        if (count > (std::size_t{1} << 24)) {
            throw DomainError("too many covering cubes");
        }
    }
    std::vector<Cube> out;
    out.reserve(count);
    Cube c{k, lo};
    while (true) {
        out.push_back(c);
        int i = 0;
        for (; i < n; ++i) {
            if (c.v[i] < hi[i]) {
                ++c.v[i];
                break;
            }
            c.v[i] = lo[i];
        }
        if (i == n) {
            return out;
        }
    }
}

}  // namespace udc
