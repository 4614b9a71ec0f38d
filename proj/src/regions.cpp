#include "udc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "linalg.hpp"
#include "udc/errors.hpp"
#include "udc/numeric.hpp"

namespace udc {

// ---------------------------------------------------------------- BoxRegion

BoxRegion::BoxRegion(AxisBox box) : box_(std::move(box)) {
    if (box_.dimension() < 1) {
        throw DomainError("box region needs dimension >= 1");
    }
}

Containment BoxRegion::classify(const AxisBox& box) const {
    if (box_.contains(box)) {
        return Containment::Inside;
    }
    return box_.overlaps(box) ? Containment::Straddles : Containment::Outside;
}

std::optional<double> BoxRegion::shape_eroded_volume(double s) const {
    double v = 1.0;
    for (int i = 0; i < box_.dimension(); ++i) {
        v *= std::max(box_.width(i) - s, 0.0);
    }
    return v;
}

std::optional<double> BoxRegion::intersection_volume(const AxisBox& box) const {
    double v = 1.0;
    for (int i = 0; i < box_.dimension(); ++i) {
        v *= std::max(std::min(box_.upper[i], box.upper[i]) - std::max(box_.lower[i], box.lower[i]), 0.0);
    }
    return v;
}

// ------------------------------------------------------------ IntervalUnion

IntervalUnion::IntervalUnion(std::vector<std::pair<double, double>> intervals) {
    std::erase_if(intervals, [](const auto& iv) { return !(iv.first < iv.second); });
    std::sort(intervals.begin(), intervals.end());
    for (const auto& iv : intervals) {
        if (!intervals_.empty() && iv.first <= intervals_.back().second) {
            intervals_.back().second = std::max(intervals_.back().second, iv.second);
        } else {
            intervals_.push_back(iv);
        }
    }
    if (intervals_.empty()) {
        throw DomainError("interval union is empty");
    }
}

Containment IntervalUnion::classify(const AxisBox& box) const {
    const double a = box.lower[0];
    const double b = box.upper[0];
    bool touches = false;
    for (const auto& [lo, hi] : intervals_) {
        if (lo <= a && b <= hi) {
            return Containment::Inside;
        }
        if (std::min(b, hi) > std::max(a, lo)) {
            touches = true;
        }
    }
    return touches ? Containment::Straddles : Containment::Outside;
}

bool IntervalUnion::contains(std::span<const double> x) const {
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [&](const auto& iv) { return iv.first <= x[0] && x[0] <= iv.second; });
}

AxisBox IntervalUnion::bounding_box() const {
    return AxisBox({intervals_.front().first}, {intervals_.back().second});
}

std::optional<double> IntervalUnion::exact_volume() const {
    double v = 0.0;
    for (const auto& [lo, hi] : intervals_) {
        v += hi - lo;
    }
    return v;
}

std::optional<double> IntervalUnion::shape_eroded_volume(double s) const {
    // A translate of [0,s] is connected, so it fits inside a single component.
    double v = 0.0;
    for (const auto& [lo, hi] : intervals_) {
        v += std::max(hi - lo - s, 0.0);
    }
    return v;
}

std::optional<double> IntervalUnion::intersection_volume(const AxisBox& box) const {
    double v = 0.0;
    for (const auto& [lo, hi] : intervals_) {
        v += std::max(std::min(hi, box.upper[0]) - std::max(lo, box.lower[0]), 0.0);
    }
    return v;
}

// ---------------------------------------------------------- EllipsoidRegion

EllipsoidRegion::EllipsoidRegion(std::vector<double> k, std::vector<double> center)
    : n_(static_cast<int>(center.size())), k_(std::move(k)), center_(std::move(center)) {
    if (n_ < 1 || k_.size() != static_cast<std::size_t>(n_) * n_) {
        throw DomainError("ellipsoid matrix must be n x n");
    }
    if (n_ > 8) {
        throw DomainError("ellipsoid dimension above 8 is not supported");
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < i; ++j) {
            if (std::abs(k_[i * n_ + j] - k_[j * n_ + i]) > 1e-12 * (1.0 + std::abs(k_[i * n_ + j]))) {
                throw DomainError("ellipsoid matrix must be symmetric");
            }
        }
    }
    // Cholesky as the positive-definiteness test.
    std::vector<double> l(k_.size(), 0.0);
    for (int j = 0; j < n_; ++j) {
        double d = k_[j * n_ + j];
        for (int p = 0; p < j; ++p) {
            d -= l[j * n_ + p] * l[j * n_ + p];
        }
        if (!(d > 0.0)) {
            throw DomainError("ellipsoid matrix must be positive definite");
        }
        l[j * n_ + j] = std::sqrt(d);
        for (int i = j + 1; i < n_; ++i) {
            double s = k_[i * n_ + j];
            for (int p = 0; p < j; ++p) {
                s -= l[i * n_ + p] * l[j * n_ + p];
            }
            l[i * n_ + j] = s / l[j * n_ + j];
        }
    }
    k_inverse_ = *detail::inverse(k_, n_);
}

EllipsoidRegion::EllipsoidRegion(std::vector<double> k)
    : EllipsoidRegion(k, std::vector<double>(static_cast<std::size_t>(std::sqrt(static_cast<double>(k.size())) + 0.5), 0.0)) {}

double EllipsoidRegion::quadratic_form(std::span<const double> x) const {
    double q = 0.0;
    for (int i = 0; i < n_; ++i) {
        const double di = x[i] - center_[i];
        double row = 0.0;
        for (int j = 0; j < n_; ++j) {
            row += k_[i * n_ + j] * (x[j] - center_[j]);
        }
        q += di * row;
    }
    return q;
}

double EllipsoidRegion::box_minimum(const AxisBox& box) const {
    // The convex minimum lies in the relative interior of exactly one face, where
    // it is the stationary point of the form restricted to that face; try all 3^n.
    double best = std::numeric_limits<double>::infinity();
    int faces = 1;
    for (int i = 0; i < n_; ++i) {
        faces *= 3;
    }
    std::vector<int> state(n_);
    std::vector<double> d(n_);
    std::vector<int> free_idx;
    for (int code = 0; code < faces; ++code) {
        int c = code;
        free_idx.clear();
        for (int i = 0; i < n_; ++i) {
            state[i] = c % 3;
            c /= 3;
            if (state[i] == 0) {
                d[i] = box.lower[i] - center_[i];
            } else if (state[i] == 1) {
                d[i] = box.upper[i] - center_[i];
            } else {
                free_idx.push_back(i);
            }
        }
        const int m = static_cast<int>(free_idx.size());
        if (m > 0) {
            std::vector<double> a(static_cast<std::size_t>(m) * m), rhs(m, 0.0);
            for (int r = 0; r < m; ++r) {
                const int i = free_idx[r];
                for (int s = 0; s < m; ++s) {
                    a[r * m + s] = k_[i * n_ + free_idx[s]];
                }
                for (int j = 0; j < n_; ++j) {
                    if (state[j] != 2) {
                        rhs[r] -= k_[i * n_ + j] * d[j];
                    }
                }
            }
            auto sol = detail::solve(std::move(a), std::move(rhs), m);
            if (!sol) {
                continue;
            }
            bool feasible = true;
            for (int r = 0; r < m; ++r) {
                const int i = free_idx[r];
                const double x = (*sol)[r] + center_[i];
                if (x < box.lower[i] || x > box.upper[i]) {
                    feasible = false;
                    break;
                }
                d[i] = (*sol)[r];
            }
            if (!feasible) {
                continue;
            }
        }
        double q = 0.0;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                q += d[i] * k_[i * n_ + j] * d[j];
            }
        }
        best = std::min(best, q);
    }
    return best;
}

Containment EllipsoidRegion::classify(const AxisBox& box) const {
    bool all_inside = true;
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
        if (!contains(box.corner(mask))) {
            all_inside = false;
            break;
        }
    }
    if (all_inside) {
        return Containment::Inside;
    }
    return box_minimum(box) >= 1.0 ? Containment::Outside : Containment::Straddles;
}

AxisBox EllipsoidRegion::bounding_box() const {
    std::vector<double> lo(n_), hi(n_);
    for (int i = 0; i < n_; ++i) {
        const double r = std::sqrt(k_inverse_[i * n_ + i]);
        lo[i] = center_[i] - r;
        hi[i] = center_[i] + r;
    }
    return AxisBox(std::move(lo), std::move(hi));
}

std::optional<double> EllipsoidRegion::exact_volume() const {
    const double half_n = 0.5 * n_;
    const double unit_ball = std::pow(std::numbers::pi, half_n) / std::tgamma(half_n + 1.0);
    return unit_ball / std::sqrt(detail::determinant(k_, n_));
}

std::pair<double, double> EllipsoidRegion::chord(double x) const {
    const double dx = x - center_[0];
    const double a = k_[3];
    const double b = k_[1] * dx;
    const double c = k_[0] * dx * dx - 1.0;
    const double disc = b * b - a * c;
    if (disc <= 0.0) {
        return {0.0, 0.0};
    }
    const double root = std::sqrt(disc);
    return {center_[1] + (-b - root) / a, center_[1] + (-b + root) / a};
}

std::optional<double> EllipsoidRegion::shape_eroded_volume(double s) const {
    const AxisBox bb = bounding_box();
    if (n_ == 1) {
        return std::max(bb.width(0) - s, 0.0);
    }
    if (n_ != 2) {
        return std::nullopt;
    }
    // x + [0,s]^2 lies in the convex set iff its four corners do; slice along x_1.
    const double x_lo = bb.lower[0];
    const double x_hi = bb.upper[0] - s;
    if (x_hi <= x_lo) {
        return 0.0;
    }
    constexpr int kSlices = 4096;
    const double h = (x_hi - x_lo) / kSlices;
    CompensatedSum total;
    for (int i = 0; i < kSlices; ++i) {
        const double x = x_lo + (i + 0.5) * h;
        const auto [a0, b0] = chord(x);
        const auto [a1, b1] = chord(x + s);
        total += std::max(std::min(b0, b1) - std::max(a0, a1) - s, 0.0);
    }
    return total.value() * h;
}

// ---------------------------------------------------------- PredicateRegion

PredicateRegion::PredicateRegion(Predicate member, AxisBox bounds, bool orthogonally_convex,
                                 Classifier classifier, std::optional<double> volume)
    : member_(std::move(member)),
      bounds_(std::move(bounds)),
      orthogonally_convex_(orthogonally_convex),
      classifier_(std::move(classifier)),
      volume_(volume) {
    if (!member_) {
        throw DomainError("predicate region needs a membership predicate");
    }
}

Containment PredicateRegion::classify(const AxisBox& box) const {
    if (classifier_) {
        return classifier_(box);
    }
    if (!bounds_.overlaps(box)) {
        return Containment::Outside;
    }
    if (!orthogonally_convex_) {
        throw OracleRefused("predicate region without a cube classifier is not declared orthogonally convex");
    }
    const int n = dimension();
    bool all = member_(box.center());
    for (unsigned mask = 0; all && mask < (1u << n); ++mask) {
        all = member_(box.corner(mask));
    }
    // Points alone never certify Outside; an undecided box is reported as straddling.
    return all ? Containment::Inside : Containment::Straddles;
}

// ------------------------------------------------------------ free functions

namespace {

void volume_dfs(const Region& region, const Cube& c, int k_max, CompensatedSum& inside, CompensatedSum& straddle) {
    const AxisBox box = cube_box(c);
    const Containment cls = region.classify(box);
    if (cls == Containment::Outside) {
        return;
    }
    if (cls == Containment::Inside) {
        inside += box.volume();
        return;
    }
    if (c.k >= k_max) {
        straddle += box.volume();
        return;
    }
    for (unsigned mask = 0; mask < (1u << c.dimension()); ++mask) {
        volume_dfs(region, c.child(mask), k_max, inside, straddle);
    }
}

}  // namespace

VolumeEstimate volume(const Region& region, double resolution) {
    const AxisBox bb = region.bounding_box();
    if (auto v = region.exact_volume()) {
        return {*v, *v, *v};
    }
    const int k_start = start_level(bb);
    const int k_max = std::max(k_start, static_cast<int>(std::ceil(-std::log2(resolution))));
    CompensatedSum inside, straddle;
    for (const Cube& c : covering_cubes(bb, k_start)) {
        volume_dfs(region, c, k_max, inside, straddle);
    }
    const double lo = inside.value();
    const double hi = lo + straddle.value();
    return {0.5 * (lo + hi), lo, hi};
}

double eroded_volume(const Region& region, double s, int grid_per_axis) {
    if (!(s > 0.0)) {
        throw DomainError("erosion side must be positive");
    }
    if (auto v = region.shape_eroded_volume(s)) {
        return *v;
    }
    const AxisBox bb = region.bounding_box();
    const int n = bb.dimension();
    std::vector<double> step(n);
    double cell = 1.0;
    for (int i = 0; i < n; ++i) {
        const double span = bb.width(i) - s;
        if (span <= 0.0) {
            return 0.0;
        }
        step[i] = span / grid_per_axis;
        cell *= step[i];
    }
    std::vector<int> idx(n, 0);
    std::vector<double> x(n);
    std::size_t hits = 0;
    while (true) {
        for (int i = 0; i < n; ++i) {
            x[i] = bb.lower[i] + (idx[i] + 0.5) * step[i];
        }
        if (region.classify(AxisBox::cube(x, s)) == Containment::Inside) {
            ++hits;
        }
        int i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < grid_per_axis) {
                break;
            }
            idx[i] = 0;
        }
        if (i == n) {
            break;
        }
    }
    return static_cast<double>(hits) * cell;
}

namespace {

double trapezoid(const std::function<double(double)>& g, double a, double b, int steps) {
    if (b <= a) {
        return 0.0;
    }
    const double h = (b - a) / steps;
    CompensatedSum s;
    s += 0.5 * (g(a) + g(b));
    for (int i = 1; i < steps; ++i) {
        s += g(a + i * h);
    }
    return s.value() * h;
}

}  // namespace

ErosionEntropy erosion_entropy(const std::function<double(double)>& eroded, double vol, double max_width,
                               const ErosionWindow& window) {
    if (!(vol > 0.0) || !std::isfinite(vol)) {
        throw DomainError("erosion entropy needs a set of positive finite volume");
    }
    if (window.steps < 32) {
        throw DomainError("erosion entropy needs at least 32 steps");
    }
    const double t_lo = window.t_lo.value_or(-std::log2(max_width) - 2.0);
    const double a = std::min(t_lo, 0.0);
    const double b = window.t_hi;
    if (b <= 0.0) {
        throw DomainError("erosion entropy window must extend past t = 0");
    }
    // Left piece: integrand -E/V; right piece: 1 - E/V. The jump at 0 is kept on a node.
    auto left = [&](double t) { return -eroded(std::exp2(-t)) / vol; };
    auto right = [&](double t) { return 1.0 - eroded(std::exp2(-t)) / vol; };
    const int left_steps = a < 0.0 ? std::max(16, static_cast<int>(window.steps * (-a) / (b - a))) : 0;
    const int right_steps = std::max(16, window.steps - left_steps);

    auto integrate = [&](int divisor) {
        double total = right(b) / std::numbers::ln2;  // integrand decays like 2^-t past t_hi
        if (left_steps > 0) {
            total += trapezoid(left, a, 0.0, std::max(1, left_steps / divisor));
        }
        total += trapezoid(right, 0.0, b, std::max(1, right_steps / divisor));
        return total;
    };
    const double fine = integrate(1);
    const double coarse = integrate(2);
    return {fine, std::abs(fine - coarse) / 3.0};
}

ErosionEntropy erosion_entropy(const Region& region, const ErosionWindow& window) {
    const double vol = volume(region).value;
    return erosion_entropy([&](double s) { return eroded_volume(region, s); }, vol,
                           region.bounding_box().max_width(), window);
}

std::vector<double> sample_uniform(const Region& region, Rng& rng) {
    constexpr std::size_t kMaxTries = 10'000'000;  // acceptance below 1e-7 is a failure
    const AxisBox bb = region.bounding_box();
    std::vector<double> x(bb.dimension());
    for (std::size_t t = 0; t < kMaxTries; ++t) {
        for (int i = 0; i < bb.dimension(); ++i) {
            x[i] = uniform(rng, bb.lower[i], bb.upper[i]);
        }
        if (region.contains(x)) {
            return x;
        }
    }
    throw SamplingFailure("rejection sampler found no point of the region");
}

MeanEstimate mean_inf_norm(const Region& region, std::span<const double> xhat, std::size_t samples, Rng& rng) {
    if (samples < 2) {
        throw DomainError("mean_inf_norm needs at least two samples");
    }
    const AxisBox bb = region.bounding_box();
    const int n = bb.dimension();
    std::vector<double> x(n);
    std::size_t accepted = 0;
    std::size_t tries = 0;
    double mean = 0.0;
    double m2 = 0.0;
    while (accepted < samples) {
        ++tries;
        if (tries > 1'000'000 && static_cast<double>(accepted) < 1e-6 * static_cast<double>(tries)) {
            throw SamplingFailure("rejection acceptance rate below 1e-6");
        }
        for (int i = 0; i < n; ++i) {
            x[i] = uniform(rng, bb.lower[i], bb.upper[i]);
        }
        if (!region.contains(x)) {
            continue;
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            norm = std::max(norm, std::abs(x[i] - xhat[i]));
        }
        ++accepted;
        const double delta = norm - mean;
        mean += delta / static_cast<double>(accepted);
        m2 += delta * (norm - mean);
    }
    const double var = m2 / static_cast<double>(accepted - 1);
    return {mean, std::sqrt(var / static_cast<double>(accepted))};
}

Lemma1Check lemma1_check(const Region& region, Rng& rng, std::size_t samples) {
    if (!region.orthogonally_convex()) {
        throw DomainError("lemma 1 applies to orthogonally convex sets only");
    }
    const int n = region.dimension();
    const ErosionEntropy h = erosion_entropy(region);
    const double vol = volume(region).value;
    const std::vector<double> origin(n, 0.0);
    const MeanEstimate r = mean_inf_norm(region, origin, samples, rng);
    Lemma1Check out;
    out.lhs = h.value;
    out.rhs = (n - 1) * std::log2(r.mean) - std::log2(vol) + 4.0 * n;
    out.tolerance = h.error + (n - 1) * 3.0 * r.stderr_ / (r.mean * std::numbers::ln2);
    out.holds = out.lhs <= out.rhs + out.tolerance;
    return out;
}

std::shared_ptr<Region> make_unit_box(int n) {
    return std::make_shared<BoxRegion>(AxisBox::unit(n));
}

}  // namespace udc
