#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace udc {

/// Streaming mean and variance.
class RunningStats {
public:
    void add(double x) noexcept;
    void merge(const RunningStats& other) noexcept;

    std::size_t count() const noexcept { return n_; }
    double mean() const noexcept { return mean_; }
    double variance() const noexcept;  // unbiased
    double stderr_of_mean() const noexcept;
    double min() const noexcept { return min_; }
    double max() const noexcept { return max_; }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double min_ = 0.0;
    double max_ = 0.0;
};

/// sup |F_n - F| against a continuous cdf. Sorts `samples` in place.
double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf);

/// Two-sample sup |F_a - F_b|. Sorts both inputs in place.
double ks_two_sample(std::vector<double>& a, std::vector<double>& b);

/// Asymptotic Kolmogorov survival function P(sqrt(n) D > t).
double kolmogorov_survival(double t);

}  // namespace udc
