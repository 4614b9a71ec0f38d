#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <optional>
#include <span>
#include <vector>

#include "udc/geometry.hpp"
#include "udc/random.hpp"

namespace udc {

enum class Containment { Inside, Outside, Straddles };

/// Oracle for a measurable set A in R^n.
///
/// classify() must be sound: Inside implies the closed box lies in A (up to a
/// null set), Outside implies the box meets A in a null set.
class Region {
public:
    virtual ~Region() = default;

    virtual int dimension() const = 0;
    virtual Containment classify(const AxisBox& box) const = 0;
    virtual bool contains(std::span<const double> x) const = 0;
    virtual AxisBox bounding_box() const = 0;

    virtual std::optional<double> exact_volume() const { return std::nullopt; }
    /// V(A (-) [0,s]^n) when the shape has a dedicated evaluator.
    virtual std::optional<double> shape_eroded_volume(double /*s*/) const { return std::nullopt; }
    virtual bool orthogonally_convex() const { return false; }
    /// V(A n box) when it has a closed form.
    virtual std::optional<double> intersection_volume(const AxisBox& /*box*/) const { return std::nullopt; }
};

class BoxRegion final : public Region {
public:
    explicit BoxRegion(AxisBox box);

    int dimension() const override { return box_.dimension(); }
    Containment classify(const AxisBox& box) const override;
    bool contains(std::span<const double> x) const override { return box_.contains(x); }
    AxisBox bounding_box() const override { return box_; }
    std::optional<double> exact_volume() const override { return box_.volume(); }
    std::optional<double> shape_eroded_volume(double s) const override;
    bool orthogonally_convex() const override { return true; }
    std::optional<double> intersection_volume(const AxisBox& box) const override;

    const AxisBox& box() const noexcept { return box_; }

private:
    AxisBox box_;
};

/// Finite union of pairwise disjoint closed intervals on the line.
class IntervalUnion final : public Region {
public:
    explicit IntervalUnion(std::vector<std::pair<double, double>> intervals);

    int dimension() const override { return 1; }
    Containment classify(const AxisBox& box) const override;
    bool contains(std::span<const double> x) const override;
    AxisBox bounding_box() const override;
    std::optional<double> exact_volume() const override;
    std::optional<double> shape_eroded_volume(double s) const override;
    bool orthogonally_convex() const override { return intervals_.size() == 1; }
    std::optional<double> intersection_volume(const AxisBox& box) const override;

    const std::vector<std::pair<double, double>>& intervals() const noexcept { return intervals_; }

private:
    std::vector<std::pair<double, double>> intervals_;
};

/// Open ellipsoid {x : (x-c)^T K (x-c) < 1}.
class EllipsoidRegion final : public Region {
public:
    /// `k` is row-major n x n, symmetric positive definite.
    EllipsoidRegion(std::vector<double> k, std::vector<double> center);
    explicit EllipsoidRegion(std::vector<double> k);

    int dimension() const override { return n_; }
    Containment classify(const AxisBox& box) const override;
    bool contains(std::span<const double> x) const override { return quadratic_form(x) < 1.0; }
    AxisBox bounding_box() const override;
    std::optional<double> exact_volume() const override;
    std::optional<double> shape_eroded_volume(double s) const override;
    bool orthogonally_convex() const override { return true; }

    double quadratic_form(std::span<const double> x) const;
    /// Exact minimum of the quadratic form over a closed box.
    double box_minimum(const AxisBox& box) const;

    const std::vector<double>& matrix() const noexcept { return k_; }
    const std::vector<double>& center() const noexcept { return center_; }

private:
    /// Chord {y : (x,y) in A} for n == 2, as an open interval (empty if lo >= hi).
    std::pair<double, double> chord(double x) const;

    int n_;
    std::vector<double> k_;
    std::vector<double> center_;
    std::vector<double> k_inverse_;
};

/// User region given by a membership predicate.
///
/// Without a classifier, Inside is certified from the corners and centre only
/// when the shape is declared orthogonally convex; otherwise classification of
/// a box that may straddle refuses with OracleRefused.
class PredicateRegion final : public Region {
public:
    using Predicate = std::function<bool(std::span<const double>)>;
    using Classifier = std::function<Containment(const AxisBox&)>;

    PredicateRegion(Predicate member, AxisBox bounds, bool orthogonally_convex,
                    Classifier classifier = nullptr, std::optional<double> volume = std::nullopt);

    int dimension() const override { return bounds_.dimension(); }
    Containment classify(const AxisBox& box) const override;
    bool contains(std::span<const double> x) const override { return member_(x); }
    AxisBox bounding_box() const override { return bounds_; }
    std::optional<double> exact_volume() const override { return volume_; }
    bool orthogonally_convex() const override { return orthogonally_convex_; }

private:
    Predicate member_;
    AxisBox bounds_;
    bool orthogonally_convex_;
    Classifier classifier_;
    std::optional<double> volume_;
};

struct VolumeEstimate {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Exact volume when available, else the dyadic bracket [inside, inside+straddle]
/// at cubes of side `resolution`.
VolumeEstimate volume(const Region& region, double resolution = 0x1.0p-10);

/// V(A (-) [0,s]^n). Falls back to a grid count of x with x+[0,s]^n Inside.
double eroded_volume(const Region& region, double s, int grid_per_axis = 512);

struct ErosionEntropy {
    double value = 0.0;
    double error = 0.0;  // step-halving estimate
};

struct ErosionWindow {
    std::optional<double> t_lo;  // default -log(max width) - 2
    double t_hi = 30.0;
    int steps = 4096;
};

/// h_{(-)[0,1]^n}(A) = int (1{t>=0} - V(A (-) 2^-t [0,1]^n)/V(A)) dt.
ErosionEntropy erosion_entropy(const Region& region, const ErosionWindow& window = {});

/// Same integral for an arbitrary eroded-volume function of total volume `vol`.
ErosionEntropy erosion_entropy(const std::function<double(double)>& eroded, double vol, double max_width,
                               const ErosionWindow& window = {});

struct MeanEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

/// E ||X - xhat||_inf for X ~ Unif(A) by rejection sampling.
MeanEstimate mean_inf_norm(const Region& region, std::span<const double> xhat, std::size_t samples, Rng& rng);

struct Lemma1Check {
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool holds = false;
};

/// h(A) <= (n-1) log E||X||_inf - log V(A) + 4n, for orthogonally convex A.
Lemma1Check lemma1_check(const Region& region, Rng& rng, std::size_t samples = 200000);

/// Uniform point in A by rejection from the bounding box.
std::vector<double> sample_uniform(const Region& region, Rng& rng);

std::shared_ptr<Region> make_unit_box(int n);

}  // namespace udc
