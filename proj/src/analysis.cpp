#include "udc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "udc/errors.hpp"
#include "udc/numeric.hpp"
#include "udc/statistics.hpp"

namespace udc {

namespace {

struct Accumulator {
    Variant variant;
    CompensatedSum mass;
    CompensatedSum weighted_length;
    CompensatedSum mass_log_mass;
    std::size_t atoms = 0;

    void add(const Cube& c, double m) {
        mass += m;
        weighted_length += m * codeword_length(c, variant);
        mass_log_mass += m * std::log2(m);
        ++atoms;
    }
};

int far_corner_length(const AxisBox& support, Variant variant, int k_max) {
    const int n = support.dimension();
    if (variant == Variant::Bounded) {
        return codeword_length(Cube{k_max, std::vector<std::int64_t>(n, 0)}, variant);
    }
    Cube c{k_max, std::vector<std::int64_t>(n)};
    for (int i = 0; i < n; ++i) {
        const double lo = support.lower[i];
        const double hi = std::nextafter(support.upper[i], -std::numeric_limits<double>::infinity());
        const std::int64_t a = dyadic_index(lo, k_max);
        const std::int64_t b = dyadic_index(std::max(lo, hi), k_max);
        c.v[i] = codeword_length(Cube{0, {a}}, variant) >= codeword_length(Cube{0, {b}}, variant) ? a : b;
    }
    return codeword_length(c, variant);
}

LengthReport finish(const Accumulator& acc, const EnumerationSummary& s, const AxisBox& support,
                    Variant variant, int k_max, double tail) {
    LengthReport r;
    r.variant = variant;
    r.k_max = k_max;
    r.atom_count = acc.atoms;
    r.covered_mass = acc.mass.value();
    r.residual_mass = std::max(s.residual, 0.0);
    r.tail_mass = tail;
    if (!(r.covered_mass > 0.0)) {
        throw DomainError("decomposition produced no atoms above k_max");
    }
    const double sum = acc.weighted_length.value();
    r.mean_length = sum / r.covered_mass;
    const int n = support.dimension();
    const int shortest_deeper = codeword_length(Cube{k_max + 1, std::vector<std::int64_t>(n, 0)}, variant);
    const int far = std::max(far_corner_length(support, variant, k_max), shortest_deeper);
    r.mean_length_lower = sum + r.residual_mass * shortest_deeper;
    r.mean_length_upper = sum + r.residual_mass * far;
    r.entropy_hw = -acc.mass_log_mass.value() / r.covered_mass + std::log2(r.covered_mass);
    return r;
}

}  // namespace

LengthReport expected_length(const Density& f, Variant variant, int k_max) {
    SchemeConfig cfg;
    cfg.variant = variant;
    cfg.n = f.dimension();
    cfg.k_max = k_max;
    cfg.validate();
    Accumulator acc{variant, {}, {}, {}, 0};
    const auto s = enumerate_density(f, cfg.limits(), [&](const Cube& c, double m) { acc.add(c, m); });
    return finish(acc, s, f.support_box(), variant, k_max, f.tail_mass());
}

LengthReport expected_length(const Region& region, Variant variant, int k_max) {
    SchemeConfig cfg;
    cfg.variant = variant;
    cfg.n = region.dimension();
    cfg.k_max = k_max;
    cfg.validate();
    Accumulator acc{variant, {}, {}, {}, 0};
    const auto s = enumerate_uniform(region, cfg.limits(), [&](const Cube& c, double m) { acc.add(c, m); });
    return finish(acc, s, region.bounding_box(), variant, k_max, 0.0);
}

McLength mc_expected_length(const Density& f, Variant variant, std::size_t rounds, Rng& rng, int k_max) {
    if (rounds < 1) {
        throw DomainError("Monte Carlo length needs at least one round");
    }
    SchemeConfig cfg;
    cfg.variant = variant;
    cfg.n = f.dimension();
    cfg.k_max = k_max;
    cfg.max_retries = 1000;
    RunningStats stats;
    std::size_t retries = 0;
    for (std::size_t i = 0; i < rounds; ++i) {
        const Encoded e = encode_density(f, cfg, rng);
        retries += static_cast<std::size_t>(e.retries);
        stats.add(static_cast<double>(e.bits.size()));
    }
    return {stats.mean(), stats.stderr_of_mean(), rounds, retries};
}

LevelErosion expected_level_erosion_entropy(const Density& f, int z_steps, int t_steps) {
    if (z_steps < 2) {
        throw DomainError("level erosion needs at least two z steps");
    }
    const double top = f.sup();
    ErosionWindow window;
    window.steps = t_steps;
    std::shared_ptr<const Region> cached_set;  // held so its address cannot be reused
    double cached_h = 0.0;
    auto h_at = [&](double z) {
        const auto set = f.superlevel_set(z);
        if (!set) {
            return 0.0;
        }
        if (set != cached_set) {
            cached_h = erosion_entropy(*set, window).value;
            cached_set = set;
        }
        return cached_h;
    };
    auto run = [&](int steps) {
        const double dz = top / steps;
        CompensatedSum total;
        for (int i = 0; i < steps; ++i) {
            const double z = (i + 0.5) * dz;
            const double fz = f.superlevel_volume(z);
            if (fz > 0.0) {
                total += fz * h_at(z) * dz;
            }
        }
        return total.value();
    };
    const double fine = run(z_steps);
    const double coarse = run(z_steps / 2);
    return {fine, std::abs(fine - coarse) / 3.0};
}

MeanEstimate density_mean_inf_norm(const Density& f, std::span<const double> xhat, Rng& rng,
                                   std::size_t samples) {
    if (f.dimension() == 1 && f.exact_box_mass()) {
        // E|X - c| = int_0^inf P(|X - c| > t) dt over the support box
        const AxisBox box = f.support_box();
        const double c = xhat[0];
        const double reach = std::max(std::abs(box.lower[0] - c), std::abs(box.upper[0] - c));
        constexpr int kSteps = 1 << 16;
        const double h = reach / kSteps;
        auto outside = [&](double t) { return 1.0 - f.box_mass(AxisBox({c - t}, {c + t})); };
        CompensatedSum total;
        total += 0.5 * (outside(0.0) + outside(reach));
        for (int i = 1; i < kSteps; ++i) {
            total += outside(i * h);
        }
        return {total.value() * h, 0.0};
    }
    RunningStats stats;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = f.sample(rng);
        double norm = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            norm = std::max(norm, std::abs(x[j] - xhat[j]));
        }
        stats.add(norm);
    }
    return {stats.mean(), stats.stderr_of_mean()};
}

}  // namespace udc
