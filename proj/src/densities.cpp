#include "udc/densities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "udc/errors.hpp"
#include "udc/numeric.hpp"

namespace udc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

AxisBox intersect(const AxisBox& a, const AxisBox& b) {
    AxisBox out;
    out.lower.resize(a.lower.size());
    out.upper.resize(a.lower.size());
    for (std::size_t i = 0; i < a.lower.size(); ++i) {
        out.lower[i] = std::max(a.lower[i], b.lower[i]);
        out.upper[i] = std::max(out.lower[i], std::min(a.upper[i], b.upper[i]));
    }
    return out;
}

bool is_empty(const AxisBox& box) {
    for (int i = 0; i < box.dimension(); ++i) {
        if (box.upper[i] <= box.lower[i]) {
            return true;
        }
    }
    return false;
}

double wrap01(double x) {
    const double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
}

/// Is some p + m (m integer) inside [a, b]?
bool hits_lattice(double p, double a, double b) {
    return std::ceil(a - p) <= std::floor(b - p);
}

std::shared_ptr<const Region> make_intervals(std::vector<std::pair<double, double>> pieces) {
    std::erase_if(pieces, [](const auto& iv) { return !(iv.first < iv.second); });
    if (pieces.empty()) {
        return nullptr;
    }
    return std::make_shared<IntervalUnion>(std::move(pieces));
}

/// Inverse of a continuous non-decreasing cdf on [lo, hi] by bisection.
double invert_cdf(const std::function<double(double)>& cdf, double target, double lo, double hi) {
    for (int it = 0; it < 100 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (cdf(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double Density::superlevel_volume(double z) const {
    const auto set = superlevel_set(z);
    return set ? set->exact_volume().value_or(volume(*set).value) : 0.0;
}

// ---------------------------------------------------------------- Gaussian1d

double Gaussian1d::pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(kTwoPi);
}

double Gaussian1d::cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double Gaussian1d::eval(std::span<const double> x) const {
    return pdf(x[0]);
}

double Gaussian1d::sup() const {
    return 1.0 / std::sqrt(kTwoPi);
}

double Gaussian1d::tail_mass() const {
    return std::erfc(kTruncation / std::numbers::sqrt2);
}

double Gaussian1d::cube_inf(const AxisBox& box) const {
    // unimodal about 0: the endpoint farther from the mode
    return std::min(pdf(box.lower[0]), pdf(box.upper[0]));
}

double Gaussian1d::cube_sup(const AxisBox& box) const {
    if (box.lower[0] <= 0.0 && 0.0 <= box.upper[0]) {
        return sup();
    }
    return std::max(pdf(box.lower[0]), pdf(box.upper[0]));
}

std::vector<double> Gaussian1d::sample(Rng& rng) const {
    const double u1 = uniform_open01(rng);
    const double u2 = uniform01(rng);
    return {std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2)};
}

double Gaussian1d::box_mass(const AxisBox& box) const {
    const double a = box.lower[0];
    const double b = box.upper[0];
    // subtract in the tail that keeps precision
    if (a >= 0.0) {
        return cdf(-a) - cdf(-b);
    }
    return cdf(b) - cdf(a);
}

std::shared_ptr<const Region> Gaussian1d::superlevel_set(double z) const {
    if (z <= 0.0) {
        return make_intervals({{-kTruncation, kTruncation}});
    }
    if (z >= sup()) {
        return nullptr;
    }
    const double r = std::min(std::sqrt(2.0 * std::log(sup() / z)), kTruncation);
    return make_intervals({{-r, r}});
}

double Gaussian1d::differential_entropy() const {
    return 0.5 * std::log2(kTwoPi * std::numbers::e);
}

// -------------------------------------------------------- ShiftedExponential

ShiftedExponential::ShiftedExponential(double a) : a_(a) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw DomainError("shifted exponential needs a >= 0");
    }
}

double ShiftedExponential::eval(std::span<const double> x) const {
    return x[0] < a_ ? 0.0 : std::exp(-(x[0] - a_));
}

double ShiftedExponential::tail_mass() const {
    return std::exp(-kTruncation);
}

double ShiftedExponential::cube_inf(const AxisBox& box) const {
    if (box.lower[0] < a_) {
        return 0.0;
    }
    return std::exp(-(box.upper[0] - a_));
}

double ShiftedExponential::cube_sup(const AxisBox& box) const {
    if (box.upper[0] < a_) {
        return 0.0;
    }
    return std::exp(-(std::max(box.lower[0], a_) - a_));
}

std::vector<double> ShiftedExponential::sample(Rng& rng) const {
    return {a_ - std::log(uniform_open01(rng))};
}

double ShiftedExponential::cdf(double x) const {
    return x <= a_ ? 0.0 : -std::expm1(-(x - a_));
}

double ShiftedExponential::box_mass(const AxisBox& box) const {
    const double a = std::max(box.lower[0], a_);
    const double b = std::max(box.upper[0], a_);
    return std::exp(-(a - a_)) - std::exp(-(b - a_));
}

std::shared_ptr<const Region> ShiftedExponential::superlevel_set(double z) const {
    if (z > 1.0) {
        return nullptr;
    }
    const double len = z <= 0.0 ? kTruncation : std::min(-std::log(z), kTruncation);
    return make_intervals({{a_, a_ + len}});
}

double ShiftedExponential::differential_entropy() const {
    return kLog2E;
}

// ------------------------------------------------------------------ BellUnit

BellUnit::BellUnit(double theta) : theta_(wrap01(theta)) {
    if (!std::isfinite(theta)) {
        throw DomainError("bell phase must be finite");
    }
}

bool BellUnit::wraps() const noexcept {
    return theta_ < 0.25 || theta_ > 0.75;
}

double BellUnit::sup() const {
    return kPi;
}

double BellUnit::eval(std::span<const double> x) const {
    if (x[0] < 0.0 || x[0] > 1.0) {
        return 0.0;
    }
    return kPi * std::max(std::cos(kTwoPi * (x[0] - theta_)), 0.0);
}

double BellUnit::cube_inf(const AxisBox& box) const {
    const double a = box.lower[0];
    const double b = box.upper[0];
    if (a < 0.0 || b > 1.0) {
        return 0.0;
    }
    if (hits_lattice(theta_ + 0.5, a, b)) {
        return 0.0;
    }
    const double m = std::min(std::cos(kTwoPi * (a - theta_)), std::cos(kTwoPi * (b - theta_)));
    return kPi * std::max(m, 0.0);
}

double BellUnit::cube_sup(const AxisBox& box) const {
    const double a = std::max(box.lower[0], 0.0);
    const double b = std::min(box.upper[0], 1.0);
    if (a > b) {
        return 0.0;
    }
    if (hits_lattice(theta_, a, b)) {
        return kPi;
    }
    const double m = std::max(std::cos(kTwoPi * (a - theta_)), std::cos(kTwoPi * (b - theta_)));
    return kPi * std::max(m, 0.0);
}

std::vector<double> BellUnit::sample(Rng& rng) const {
    const double p = uniform01(rng);
    return {wrap01(theta_ + std::asin(2.0 * p - 1.0) / kTwoPi)};
}

double BellUnit::cumulative(double y) const {
    const double u = y - theta_ + 0.25;
    const double m = std::floor(u);
    const double r = u - m;
    const double part = r < 0.5 ? 0.5 * (std::sin(kTwoPi * (r - 0.25)) + 1.0) : 1.0;
    return m + part;
}

double BellUnit::cdf(double x) const {
    return cumulative(std::clamp(x, 0.0, 1.0)) - cumulative(0.0);
}

double BellUnit::box_mass(const AxisBox& box) const {
    return std::max(cdf(box.upper[0]) - cdf(box.lower[0]), 0.0);
}

std::shared_ptr<const Region> BellUnit::superlevel_set(double z) const {
    if (z > kPi) {
        return nullptr;
    }
    if (z <= 0.0) {
        return make_intervals({{0.0, 1.0}});
    }
    const double half = 0.5 * superlevel_volume(z);
    const double lo = theta_ - half;
    const double hi = theta_ + half;
    if (lo < 0.0) {
        return make_intervals({{0.0, hi}, {lo + 1.0, 1.0}});
    }
    if (hi > 1.0) {
        return make_intervals({{0.0, hi - 1.0}, {lo, 1.0}});
    }
    return make_intervals({{lo, hi}});
}

double BellUnit::superlevel_volume(double z) const {
    if (z > kPi) {
        return 0.0;
    }
    if (z <= 0.0) {
        return 1.0;
    }
    return std::acos(z / kPi) / kPi;
}

double BellUnit::differential_entropy() const {
    return kLog2E - 1.0 - std::log2(kPi);
}

// ---------------------------------------------------------------- BellCosine

namespace {

double unit_phase_of(double theta, int y_a) {
    if (y_a != 1 && y_a != -1) {
        throw DomainError("y_A must be +1 or -1");
    }
    if (!std::isfinite(theta)) {
        throw DomainError("bell angle must be finite");
    }
    return wrap01(theta / kTwoPi + (1 - y_a) / 4.0);
}

}  // namespace

BellCosine::BellCosine(double theta, int y_a) : unit_(unit_phase_of(theta, y_a)) {}

AxisBox BellCosine::to_unit(const AxisBox& box) const {
    return AxisBox({box.lower[0] / kTwoPi}, {box.upper[0] / kTwoPi});
}

AxisBox BellCosine::support_box() const {
    return AxisBox({0.0}, {kTwoPi});
}

double BellCosine::eval(std::span<const double> x) const {
    const double u = x[0] / kTwoPi;
    return unit_.eval(std::span<const double>(&u, 1)) / kTwoPi;
}

double BellCosine::cube_inf(const AxisBox& box) const {
    return unit_.cube_inf(to_unit(box)) / kTwoPi;
}

double BellCosine::cube_sup(const AxisBox& box) const {
    return unit_.cube_sup(to_unit(box)) / kTwoPi;
}

std::vector<double> BellCosine::sample(Rng& rng) const {
    return {kTwoPi * unit_.sample(rng)[0]};
}

double BellCosine::box_mass(const AxisBox& box) const {
    return unit_.box_mass(to_unit(box));
}

std::shared_ptr<const Region> BellCosine::superlevel_set(double z) const {
    const auto set = std::dynamic_pointer_cast<const IntervalUnion>(unit_.superlevel_set(kTwoPi * z));
    if (!set) {
        return nullptr;
    }
    std::vector<std::pair<double, double>> scaled;
    for (const auto& [lo, hi] : set->intervals()) {
        scaled.emplace_back(kTwoPi * lo, kTwoPi * hi);
    }
    return make_intervals(std::move(scaled));
}

double BellCosine::superlevel_volume(double z) const {
    return kTwoPi * unit_.superlevel_volume(kTwoPi * z);
}

double BellCosine::differential_entropy() const {
    return unit_.differential_entropy() + std::log2(kTwoPi);
}

// ----------------------------------------------------------------- UniformOn

UniformOn::UniformOn(std::shared_ptr<const Region> region) : region_(std::move(region)) {
    if (!region_) {
        throw DomainError("uniform density needs a region");
    }
    volume_ = udc::volume(*region_).value;
    if (!(volume_ > 0.0) || !std::isfinite(volume_)) {
        throw DomainError("uniform density needs a region of positive finite volume");
    }
}

double UniformOn::eval(std::span<const double> x) const {
    return region_->contains(x) ? 1.0 / volume_ : 0.0;
}

double UniformOn::cube_inf(const AxisBox& box) const {
    return region_->classify(box) == Containment::Inside ? 1.0 / volume_ : 0.0;
}

double UniformOn::cube_sup(const AxisBox& box) const {
    return region_->classify(box) == Containment::Outside ? 0.0 : 1.0 / volume_;
}

std::vector<double> UniformOn::sample(Rng& rng) const {
    return sample_uniform(*region_, rng);
}

bool UniformOn::exact_box_mass() const {
    return region_->intersection_volume(region_->bounding_box()).has_value();
}

namespace {

double straddle_volume(const Region& region, const AxisBox& box, int depth) {
    switch (region.classify(box)) {
        case Containment::Inside:
            return box.volume();
        case Containment::Outside:
            return 0.0;
        case Containment::Straddles:
            break;
    }
    if (depth == 0) {
        return 0.5 * box.volume();
    }
    const int n = box.dimension();
    double total = 0.0;
    const std::vector<double> mid = box.center();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        AxisBox child = box;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) {
                child.lower[i] = mid[i];
            } else {
                child.upper[i] = mid[i];
            }
        }
        total += straddle_volume(region, child, depth - 1);
    }
    return total;
}

}  // namespace

double UniformOn::box_mass(const AxisBox& box) const {
    if (auto v = region_->intersection_volume(box)) {
        return *v / volume_;
    }
    const int depth = std::max(1, 12 / dimension());
    return straddle_volume(*region_, box, depth) / volume_;
}

std::shared_ptr<const Region> UniformOn::superlevel_set(double z) const {
    return z <= 1.0 / volume_ ? region_ : nullptr;
}

double UniformOn::superlevel_volume(double z) const {
    return z <= 1.0 / volume_ ? volume_ : 0.0;
}

double UniformOn::differential_entropy() const {
    return std::log2(volume_);
}

// --------------------------------------------------------- RestrictedDensity

RestrictedDensity::RestrictedDensity(std::shared_ptr<const Density> base, AxisBox piece)
    : base_(std::move(base)), piece_(std::move(piece)) {
    if (!base_ || piece_.dimension() != base_->dimension()) {
        throw DomainError("restriction piece has the wrong dimension");
    }
    mass_ = base_->box_mass(piece_);
    if (!(mass_ > 0.0)) {
        throw DomainError("restriction piece carries no probability");
    }
}

double RestrictedDensity::eval(std::span<const double> x) const {
    return piece_.contains(x) ? base_->eval(x) / mass_ : 0.0;
}

double RestrictedDensity::sup() const {
    return base_->cube_sup(piece_) / mass_;
}

AxisBox RestrictedDensity::support_box() const {
    return intersect(base_->support_box(), piece_);
}

double RestrictedDensity::cube_inf(const AxisBox& box) const {
    return piece_.contains(box) ? base_->cube_inf(box) / mass_ : 0.0;
}

double RestrictedDensity::cube_sup(const AxisBox& box) const {
    const AxisBox clipped = intersect(box, piece_);
    for (int i = 0; i < clipped.dimension(); ++i) {
        if (box.upper[i] < piece_.lower[i] || box.lower[i] > piece_.upper[i]) {
            return 0.0;
        }
    }
    return base_->cube_sup(clipped) / mass_;
}

std::vector<double> RestrictedDensity::sample(Rng& rng) const {
    if (dimension() == 1) {
        const double lo = base_->box_mass(AxisBox({-std::numeric_limits<double>::infinity()}, {piece_.lower[0]}));
        const double target = lo + uniform01(rng) * mass_;
        auto cdf = [&](double x) {
            return base_->box_mass(AxisBox({-std::numeric_limits<double>::infinity()}, {x}));
        };
        return {invert_cdf(cdf, target, piece_.lower[0], piece_.upper[0])};
    }
    for (int t = 0; t < 10'000'000; ++t) {
        auto x = base_->sample(rng);
        if (piece_.contains(x)) {
            return x;
        }
    }
    throw SamplingFailure("restricted sampler found no point in the piece");
}

double RestrictedDensity::box_mass(const AxisBox& box) const {
    const AxisBox clipped = intersect(box, piece_);
    if (is_empty(clipped)) {
        return 0.0;
    }
    return base_->box_mass(clipped) / mass_;
}

std::shared_ptr<const Region> RestrictedDensity::superlevel_set(double z) const {
    if (dimension() != 1) {
        throw DomainError("restricted superlevel sets are available in one dimension only");
    }
    const auto set = std::dynamic_pointer_cast<const IntervalUnion>(base_->superlevel_set(z * mass_));
    if (!set) {
        return nullptr;
    }
    std::vector<std::pair<double, double>> clipped;
    for (const auto& [lo, hi] : set->intervals()) {
        clipped.emplace_back(std::max(lo, piece_.lower[0]), std::min(hi, piece_.upper[0]));
    }
    return make_intervals(std::move(clipped));
}

double RestrictedDensity::differential_entropy() const {
    if (dimension() != 1) {
        throw DomainError("restricted entropy is available in one dimension only");
    }
    const AxisBox box = support_box();
    constexpr int kSteps = 1 << 16;
    const double h = box.width(0) / kSteps;
    CompensatedSum total;
    for (int i = 0; i < kSteps; ++i) {
        const double x = box.lower[0] + (i + 0.5) * h;
        const double fx = eval(std::span<const double>(&x, 1));
        if (fx > 0.0) {
            total += -fx * std::log2(fx);
        }
    }
    return total.value() * h;
}

// ---------------------------------------------------------- SuperlevelRegion

SuperlevelRegion::SuperlevelRegion(const Density& f, double z) : f_(f), z_(z) {
    if (!(z > 0.0)) {
        throw DomainError("superlevel threshold must be positive");
    }
}

Containment SuperlevelRegion::classify(const AxisBox& box) const {
    if (f_.cube_inf(box) >= z_) {
        return Containment::Inside;
    }
    return f_.cube_sup(box) < z_ ? Containment::Outside : Containment::Straddles;
}

// ------------------------------------------------------------ free functions

LevelEntropy level_density_and_entropy(const Density& f, int z_steps) {
    if (z_steps < 2) {
        throw DomainError("level density needs at least two z steps");
    }
    const double top = f.sup();
    if (!(top > 0.0) || !std::isfinite(top)) {
        throw DomainError("level density needs a finite supremum");
    }
    auto run = [&](int steps, LevelEntropy* table) {
        const double dz = top / steps;
        CompensatedSum integral, entropy;
        for (int i = 0; i < steps; ++i) {
            const double z = (i + 0.5) * dz;
            const double v = f.superlevel_volume(z);
            if (table) {
                table->z.push_back(z);
                table->f_z.push_back(v);
            }
            integral += v * dz;
            if (v > 0.0) {
                entropy += -v * std::log2(v) * dz;
            }
        }
        return std::pair{entropy.value(), integral.value()};
    };
    LevelEntropy out;
    const auto [h, integral] = run(z_steps, &out);
    const auto [h_coarse, unused] = run(z_steps / 2, nullptr);
    (void)unused;
    out.h_z = h;
    out.integral = integral;
    out.error = std::abs(h - h_coarse) / 3.0;
    if (!std::isfinite(h) || std::abs(integral - 1.0) > 1e-3) {
        throw QuadratureFailure("level density integrates to " + format_double(integral) + ", not 1");
    }
    return out;
}

double cdf_1d(const Density& f, double x) {
    if (f.dimension() != 1) {
        throw DomainError("cdf_1d needs a one-dimensional density");
    }
    return f.box_mass(AxisBox({-std::numeric_limits<double>::infinity()}, {x}));
}

}  // namespace udc
