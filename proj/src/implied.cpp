#include "udc/implied.hpp"

#include <algorithm>
#include <cmath>

#include "udc/errors.hpp"
#include "udc/integer_codes.hpp"
#include "udc/numeric.hpp"

namespace udc {

ImpliedTable::ImpliedTable(Variant variant, int n, int k_lo, int k_hi, std::int64_t v_max)
    : variant_(variant), n_(n), k_lo_(k_lo), k_hi_(k_hi), v_max_(v_max) {
    if (n < 1) {
        throw DomainError("implied table needs dimension >= 1");
    }
    if (k_lo > k_hi) {
        throw DomainError("implied table level range is empty");
    }
    if (v_max < 0 || v_max > (std::int64_t{1} << 61)) {
        throw DomainError("implied table needs 0 <= v_max <= 2^61");
    }
    if (variant == Variant::Bounded && (k_lo < 0 || k_hi > 62)) {
        throw DomainError("bounded implied table needs 0 <= k_lo <= k_hi <= 62");
    }
    if (variant == Variant::Unbounded && (k_lo < -1000 || k_hi > 1000)) {
        throw DomainError("implied table levels must lie in [-1000, 1000]");
    }
}

double ImpliedTable::level_weight(int k) const {
    if (k < k_lo_ || k > k_hi_) {
        return 0.0;
    }
    if (variant_ == Variant::Unbounded) {
        return std::ldexp(1.0, n_ * k - codes::delta_signed_length(k));
    }
    return std::ldexp(1.0, -(2 * codes::floor_log2(static_cast<std::uint64_t>(k) + 1) + 1));
}

double ImpliedTable::coord_weight(int k, std::int64_t v) const {
    if (variant_ == Variant::Unbounded) {
        return (v <= v_max_ && v >= -v_max_) ? std::ldexp(1.0, -codes::delta_signed_length(v)) : 0.0;
    }
    return (v >= 0 && v < (std::int64_t{1} << k) && v <= v_max_) ? 1.0 : 0.0;
}

double ImpliedTable::coord_sum(int k) const {
    if (variant_ == Variant::Bounded) {
        return static_cast<double>(std::min<std::int64_t>(std::int64_t{1} << k, v_max_ + 1));
    }
    // |v| <= V maps onto zigzag indices m = 1..2V+1; the delta+ length of m
    // depends only on N = floor(log2 m), so sum group by group.
    const std::uint64_t m_max = 2 * static_cast<std::uint64_t>(v_max_) + 1;
    CompensatedSum total;
    for (int big_n = 0; big_n <= codes::floor_log2(m_max); ++big_n) {
        const std::uint64_t first = std::uint64_t{1} << big_n;
        const std::uint64_t last = std::min(2 * first - 1, m_max);
        const int len = big_n + 2 * codes::floor_log2(static_cast<std::uint64_t>(big_n) + 1) + 1;
        total += std::ldexp(static_cast<double>(last - first + 1), -len);
    }
    return total.value();
}

double ImpliedTable::normalizer() const {
    CompensatedSum z;
    for (int k = k_lo_; k <= k_hi_; ++k) {
        z += std::ldexp(level_weight(k), -n_ * k) * std::pow(coord_sum(k), n_);
    }
    return z.value();
}

double ImpliedTable::unnormalized(std::span<const double> x) const {
    CompensatedSum g;
    for (int k = k_lo_; k <= k_hi_; ++k) {
        double term = level_weight(k);
        for (int i = 0; i < n_ && term > 0.0; ++i) {
            const double scaled = std::floor(std::ldexp(x[i], k));
            if (std::abs(scaled) > 0x1.0p62) {
                term = 0.0;
                break;
            }
            term *= coord_weight(k, static_cast<std::int64_t>(scaled));
        }
        g += term;
    }
    return g.value();
}

double ImpliedTable::density(std::span<const double> x) const {
    return unnormalized(x) / normalizer();
}

ImpliedTable implied_distribution(Variant variant, int n, int k_lo, int k_hi, std::int64_t v_max) {
    return ImpliedTable(variant, n, k_lo, k_hi, v_max);
}

namespace {

std::int64_t shift_down(std::int64_t v, int levels) {
    if (levels >= 63) {
        return v < 0 ? -1 : 0;
    }
    return v >> levels;  // floor division by 2^levels
}

struct CrossEntropy {
    double cross = 0.0;  // sum P(cell) log2 g(cell)
    double leakage = 0.0;
};

CrossEntropy cross_entropy(const Density& f, const ImpliedTable& t, int level) {
    const int n = f.dimension();
    CompensatedSum cross, leak;
    std::vector<double> center(n);
    for (const Cube& cell : covering_cubes(f.support_box(), level)) {
        const AxisBox box = cube_box(cell);
        const double p = f.box_mass(box);
        if (!(p > 0.0)) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            center[i] = 0.5 * (box.lower[i] + box.upper[i]);
        }
        CompensatedSum g;
        for (int k = t.k_lo(); k <= t.k_hi(); ++k) {
            double term = t.level_weight(k);
            for (int i = 0; i < n && term > 0.0; ++i) {
                const std::int64_t v = k <= level ? shift_down(cell.v[i], level - k) : dyadic_index(center[i], k);
                term *= t.coord_weight(k, v);
            }
            g += term;
        }
        const double gv = g.value();
        if (gv > 0.0) {
            cross += p * std::log2(gv);
        } else {
            leak += p;
        }
    }
    return {cross.value(), leak.value() + f.tail_mass()};
}

}  // namespace

RelativeEntropy relative_entropy_lb(const Density& f, const ImpliedTable& table, std::optional<int> quadrature_level) {
    if (f.dimension() != table.dimension()) {
        throw DomainError("density and implied table dimensions differ");
    }
    const AxisBox support = f.support_box();
    int level = quadrature_level.value_or(
        static_cast<int>(std::floor(20.0 / f.dimension() - std::log2(support.max_width()))));
    level = std::min(level, table.k_hi());
    const int coarse_level = level - 1;

    const CrossEntropy fine = cross_entropy(f, table, level);
    if (fine.leakage > 1e-3) {
        throw CoverageError("implied table misses " + format_double(fine.leakage) +
                            " of the probability (limit 1e-3)");
    }
    const CrossEntropy coarse = cross_entropy(f, table, coarse_level);

    RelativeEntropy r;
    r.normalizer = table.normalizer();
    r.leakage = fine.leakage;
    r.quadrature_level = level;
    const double h = f.differential_entropy();
    r.kraft_bound = -h - fine.cross;
    r.divergence = r.kraft_bound + std::log2(r.normalizer);
    r.error = std::abs((-h - coarse.cross) - r.kraft_bound);
    return r;
}

}  // namespace udc
