#include "udc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "udc/errors.hpp"
#include "udc/numeric.hpp"

namespace udc::bounds {

namespace {

double checked_log2(double x, const char* what) {
    if (!(x > 0.0)) {
        throw DomainError(std::string("logarithm of non-positive ") + what + " (" + format_double(x) + ")");
    }
    return std::log2(x);
}

void check_dimension(int n) {
    if (n < 1) {
        throw DomainError("dimension must be >= 1");
    }
}

}  // namespace

double ell_delta(double t) {
    if (!(t > 0.0)) {
        throw DomainError("ell_delta needs t > 0, got " + format_double(t));
    }
    return t + 2.0 * std::log2(t);
}

double thm1(int n, double h, double mean_norm) {
    check_dimension(n);
    const double lm = checked_log2(mean_norm, "mean norm");
    return n * ell_delta(h + lm + 8.0) +
           ell_delta(checked_log2(h + 2.0 * std::max(lm, 0.0) + 9.0, "second-term argument") + 2.0);
}

double cor1(int n, double r, double xhat_norm, double volume) {
    check_dimension(n);
    const double lr = checked_log2(r, "r");
    const double lv = checked_log2(volume, "volume");
    const double first = (n - 1) * lr + checked_log2(xhat_norm + r, "||xhat|| + r") - lv + 4.0 * n + 8.0;
    const double second = (n - 1) * lr + 2.0 * std::max(r, 0.0) - lv + 4.0 * n + 9.0;
    return n * ell_delta(first) + ell_delta(checked_log2(second, "second-term argument") + 2.0);
}

double thm2(int n, double expected_h, double mean_norm) {
    check_dimension(n);
    const double lm = checked_log2(mean_norm, "mean norm");
    return n * ell_delta(expected_h + lm + 8.0) +
           ell_delta(checked_log2(expected_h + 2.0 * std::max(lm, 0.0) + 10.0, "second-term argument") + 2.0);
}

double cor2(int n, double r, double xhat_norm, double entropy_term) {
    check_dimension(n);
    const double lr = checked_log2(r, "r");
    const double first = (n - 1) * lr + checked_log2(xhat_norm + r, "||xhat|| + r") + entropy_term + 4.0 * n + 8.0;
    const double second = (n - 1) * lr + 2.0 * std::max(lr, 0.0) + entropy_term + 4.0 * n + 10.0;
    return n * ell_delta(first) + ell_delta(checked_log2(second, "second-term argument") + 2.0);
}

double thm3(int n, double entropy_term) {
    check_dimension(n);
    const double base = entropy_term + std::log2(static_cast<double>(n)) + kLog2E;
    return n * (base + 2.0) + 2.0 * checked_log2(base + 3.0, "second-term argument") + 1.0;
}

double app2(double a) {
    if (!(a >= 0.0)) {
        throw DomainError("application bound needs a >= 0");
    }
    const double l = std::log2(a + 1.0);
    return l + 2.0 * std::log2(l + 12.0) + 23.0;
}

}  // namespace udc::bounds
