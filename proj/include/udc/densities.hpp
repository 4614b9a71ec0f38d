#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "udc/geometry.hpp"
#include "udc/random.hpp"
#include "udc/regions.hpp"

namespace udc {

/// Probability density on R^n with exact per-box extrema.
///
/// Boxes are closed; at support edges a density takes its limiting value from
/// inside the support.
class Density {
public:
    virtual ~Density() = default;

    virtual int dimension() const = 0;
    virtual double eval(std::span<const double> x) const = 0;
    virtual double sup() const = 0;
    /// Box holding all but `tail_mass()` of the probability.
    virtual AxisBox support_box() const = 0;
    virtual double tail_mass() const { return 0.0; }

    /// inf of f over the closed box (exact for built-ins).
    virtual double cube_inf(const AxisBox& box) const = 0;
    virtual double cube_sup(const AxisBox& box) const = 0;

    virtual std::vector<double> sample(Rng& rng) const = 0;

    /// Probability of the box.
    virtual double box_mass(const AxisBox& box) const = 0;
    /// True when box_mass is exact rather than estimated.
    virtual bool exact_box_mass() const { return true; }

    /// L_z^+ = {x : f(x) >= z} as an exact region (empty sets as nullptr).
    virtual std::shared_ptr<const Region> superlevel_set(double z) const = 0;
    virtual double superlevel_volume(double z) const;

    /// h(f) in bits.
    virtual double differential_entropy() const = 0;
    virtual bool orthogonally_concave() const = 0;
    virtual std::string name() const = 0;
};

/// N(0,1); decomposition support truncated to [-8, 8].
class Gaussian1d final : public Density {
public:
    static constexpr double kTruncation = 8.0;

    int dimension() const override { return 1; }
    double eval(std::span<const double> x) const override;
    double sup() const override;
    AxisBox support_box() const override { return AxisBox({-kTruncation}, {kTruncation}); }
    double tail_mass() const override;
    double cube_inf(const AxisBox& box) const override;
    double cube_sup(const AxisBox& box) const override;
    std::vector<double> sample(Rng& rng) const override;
    double box_mass(const AxisBox& box) const override;
    std::shared_ptr<const Region> superlevel_set(double z) const override;
    double differential_entropy() const override;
    bool orthogonally_concave() const override { return true; }
    std::string name() const override { return "gaussian1d"; }

    static double pdf(double x);
    static double cdf(double x);
};

/// e^{-(x-a)} on [a, inf); decomposition support truncated at a + 40.
class ShiftedExponential final : public Density {
public:
    static constexpr double kTruncation = 40.0;

    explicit ShiftedExponential(double a);

    int dimension() const override { return 1; }
    double eval(std::span<const double> x) const override;
    double sup() const override { return 1.0; }
    AxisBox support_box() const override { return AxisBox({a_}, {a_ + kTruncation}); }
    double tail_mass() const override;
    double cube_inf(const AxisBox& box) const override;
    double cube_sup(const AxisBox& box) const override;
    std::vector<double> sample(Rng& rng) const override;
    double box_mass(const AxisBox& box) const override;
    std::shared_ptr<const Region> superlevel_set(double z) const override;
    double differential_entropy() const override;
    bool orthogonally_concave() const override { return true; }
    std::string name() const override { return "shifted_exponential"; }

    double shift() const noexcept { return a_; }
    double cdf(double x) const;

private:
    double a_;
};

/// pi * max(cos(2 pi (x - theta)), 0) on [0,1]. The support (theta-1/4, theta+1/4)
/// is taken mod 1 and may wrap around the ends of the interval.
class BellUnit final : public Density {
public:
    explicit BellUnit(double theta);

    int dimension() const override { return 1; }
    double eval(std::span<const double> x) const override;
    double sup() const override;
    AxisBox support_box() const override { return AxisBox::unit(1); }
    double cube_inf(const AxisBox& box) const override;
    double cube_sup(const AxisBox& box) const override;
    std::vector<double> sample(Rng& rng) const override;
    double box_mass(const AxisBox& box) const override;
    std::shared_ptr<const Region> superlevel_set(double z) const override;
    double superlevel_volume(double z) const override;
    double differential_entropy() const override;
    bool orthogonally_concave() const override { return !wraps(); }
    std::string name() const override { return "bell_unit"; }

    double theta() const noexcept { return theta_; }
    /// Support meets both ends of [0,1], so the density splits into two monotone pieces.
    bool wraps() const noexcept;
    double cdf(double x) const;

private:
    double cumulative(double y) const;  // periodic antiderivative

    double theta_;
};

/// (1/2) max(y_A cos(x - theta), 0) on [0, 2 pi]; y_A = -1 acts as a shift by pi.
class BellCosine final : public Density {
public:
    BellCosine(double theta, int y_a);

    int dimension() const override { return 1; }
    double eval(std::span<const double> x) const override;
    double sup() const override { return 0.5; }
    AxisBox support_box() const override;
    double cube_inf(const AxisBox& box) const override;
    double cube_sup(const AxisBox& box) const override;
    std::vector<double> sample(Rng& rng) const override;
    double box_mass(const AxisBox& box) const override;
    std::shared_ptr<const Region> superlevel_set(double z) const override;
    double superlevel_volume(double z) const override;
    double differential_entropy() const override;
    bool orthogonally_concave() const override { return unit_.orthogonally_concave(); }
    std::string name() const override { return "bell_cosine"; }

    const BellUnit& unit() const noexcept { return unit_; }

private:
    AxisBox to_unit(const AxisBox& box) const;

    BellUnit unit_;
};

/// 1/V(A) on A.
class UniformOn final : public Density {
public:
    explicit UniformOn(std::shared_ptr<const Region> region);

    int dimension() const override { return region_->dimension(); }
    double eval(std::span<const double> x) const override;
    double sup() const override { return 1.0 / volume_; }
    AxisBox support_box() const override { return region_->bounding_box(); }
    double cube_inf(const AxisBox& box) const override;
    double cube_sup(const AxisBox& box) const override;
    std::vector<double> sample(Rng& rng) const override;
    double box_mass(const AxisBox& box) const override;
    bool exact_box_mass() const override;
    std::shared_ptr<const Region> superlevel_set(double z) const override;
    double superlevel_volume(double z) const override;
    double differential_entropy() const override;
    bool orthogonally_concave() const override { return region_->orthogonally_convex(); }
    std::string name() const override { return "uniform_region"; }

    const Region& region() const noexcept { return *region_; }
    double volume() const noexcept { return volume_; }

private:
    std::shared_ptr<const Region> region_;
    double volume_;
};

/// Conditional density f 1{x in piece} / P(piece).
class RestrictedDensity final : public Density {
public:
    RestrictedDensity(std::shared_ptr<const Density> base, AxisBox piece);

    int dimension() const override { return base_->dimension(); }
    double eval(std::span<const double> x) const override;
    double sup() const override;
    AxisBox support_box() const override;
    double cube_inf(const AxisBox& box) const override;
    double cube_sup(const AxisBox& box) const override;
    std::vector<double> sample(Rng& rng) const override;
    double box_mass(const AxisBox& box) const override;
    bool exact_box_mass() const override { return base_->exact_box_mass(); }
    std::shared_ptr<const Region> superlevel_set(double z) const override;
    double differential_entropy() const override;
    bool orthogonally_concave() const override { return true; }
    std::string name() const override { return base_->name() + "_piece"; }

    double piece_mass() const noexcept { return mass_; }
    const AxisBox& piece() const noexcept { return piece_; }

private:
    std::shared_ptr<const Density> base_;
    AxisBox piece_;
    double mass_;
};

/// L_z^+(f) as a Region classified through cube_inf / cube_sup.
class SuperlevelRegion final : public Region {
public:
    SuperlevelRegion(const Density& f, double z);

    int dimension() const override { return f_.dimension(); }
    Containment classify(const AxisBox& box) const override;
    bool contains(std::span<const double> x) const override { return f_.eval(x) >= z_; }
    AxisBox bounding_box() const override { return f_.support_box(); }

private:
    const Density& f_;
    double z_;
};

struct LevelEntropy {
    std::vector<double> z;    // midpoints of the z grid over (0, sup f]
    std::vector<double> f_z;  // V(L_z^+) at each midpoint
    double h_z = 0.0;         // differential entropy of Z in bits
    double error = 0.0;       // step-halving estimate
    double integral = 0.0;    // int f_Z dz, should be 1
};

/// Z with density f_Z(z) = V(L_z^+(f)) on (0, sup f].
LevelEntropy level_density_and_entropy(const Density& f, int z_steps = 4096);

/// Exact CDF for one-dimensional densities; x is clamped to the real line.
double cdf_1d(const Density& f, double x);

}  // namespace udc
