#pragma once

// Small dense row-major linear algebra for n <= 8.

#include <cmath>
#include <optional>
#include <vector>

namespace udc::detail {

/// Solves A x = b by partial-pivot elimination; nullopt when singular.
inline std::optional<std::vector<double>> solve(std::vector<double> a, std::vector<double> b, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = r;
            }
        }
        if (std::abs(a[pivot * n + col]) < 1e-300) {
            return std::nullopt;
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a[col * n + c], a[pivot * n + c]);
            }
            std::swap(b[col], b[pivot]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (int c = col; c < n; ++c) {
                a[r * n + c] -= f * a[col * n + c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) {
            s -= a[r * n + c] * x[c];
        }
        x[r] = s / a[r * n + r];
    }
    return x;
}

inline double determinant(std::vector<double> a, int n) {
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = r;
            }
        }
        if (a[pivot * n + col] == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a[col * n + c], a[pivot * n + c]);
            }
            det = -det;
        }
        det *= a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (int c = col; c < n; ++c) {
                a[r * n + c] -= f * a[col * n + c];
            }
        }
    }
    return det;
}

inline std::optional<std::vector<double>> inverse(const std::vector<double>& a, int n) {
    std::vector<double> inv(static_cast<std::size_t>(n) * n);
    for (int c = 0; c < n; ++c) {
        std::vector<double> e(n, 0.0);
        e[c] = 1.0;
        auto col = solve(a, e, n);
        if (!col) {
            return std::nullopt;
        }
        for (int r = 0; r < n; ++r) {
            inv[r * n + c] = (*col)[r];
        }
    }
    return inv;
}

}  // namespace udc::detail
