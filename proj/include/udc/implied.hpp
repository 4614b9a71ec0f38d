#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "udc/codec.hpp"
#include "udc/densities.hpp"

namespace udc {

/// Truncated implied distribution: the mixture of Unif(C_w) weighted by
/// 2^{-L(w)} over codewords with k in [k_lo, k_hi] and |v_i| <= v_max.
///
/// Its density factorises as g(x) = sum_k level_weight(k) prod_i coord_weight(k, floor(2^k x_i)),
/// and normalizer() = sum over included codewords of 2^{-L(w)} (<= 1 by Kraft).
/// Dropping codewords only lowers g, so a truncated table overstates D.
class ImpliedTable {
public:
    ImpliedTable(Variant variant, int n, int k_lo, int k_hi, std::int64_t v_max);

    Variant variant() const noexcept { return variant_; }
    int dimension() const noexcept { return n_; }
    int k_lo() const noexcept { return k_lo_; }
    int k_hi() const noexcept { return k_hi_; }
    std::int64_t v_max() const noexcept { return v_max_; }

    /// 2^{-L(w)} / vol(C_w) with the coordinate factors split off.
    double level_weight(int k) const;
    double coord_weight(int k, std::int64_t v) const;
    /// sum_v coord_weight(k, v) over the admissible v.
    double coord_sum(int k) const;

    double normalizer() const;
    /// g(x): the sub-probability density sum_w 2^{-L(w)} Unif(C_w)(x).
    double unnormalized(std::span<const double> x) const;
    /// f_Im(x) = g(x) / normalizer().
    double density(std::span<const double> x) const;

private:
    Variant variant_;
    int n_;
    int k_lo_;
    int k_hi_;
    std::int64_t v_max_;
};

ImpliedTable implied_distribution(Variant variant, int n, int k_lo, int k_hi, std::int64_t v_max);

struct RelativeEntropy {
    double divergence = 0.0;   // D(f || f_Im), f_Im normalised
    double kraft_bound = 0.0;  // -h(f) - int f log g = divergence - log normalizer
    double error = 0.0;        // change when the quadrature level is coarsened by one
    double leakage = 0.0;      // mass of f where the table has no codeword
    double normalizer = 0.0;
    int quadrature_level = 0;
};

/// D(f || f_Im) by summing P(cell) log g over dyadic cells at `quadrature_level`
/// (levels deeper than it evaluated at the cell centre). Throws CoverageError when
/// the leakage exceeds 1e-3.
RelativeEntropy relative_entropy_lb(const Density& f, const ImpliedTable& table,
                                    std::optional<int> quadrature_level = std::nullopt);

}  // namespace udc
