#include "inertial/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace inertial {

Spectrum Spectrum::from_values(std::vector<double> values, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be > 0");
    Spectrum s;
    s.values_ = std::move(values);
    s.tol_ = tol;
    std::sort(s.values_.begin(), s.values_.end(), std::greater<double>());
    return s;
}

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
    double sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum += a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(sum);
}

}  // namespace

Spectrum numeric_spectrum(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be > 0");
    const int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) a[static_cast<std::size_t>(i) * n + j] = 1.0;

    double scale = 0;
    for (int i = 0; i < n; ++i) {
        double row = 0;
        for (int j = 0; j < n; ++j) row += std::abs(a[static_cast<std::size_t>(i) * n + j]);
        scale = std::max(scale, row);
    }

    constexpr int kMaxSweeps = 100;
    if (scale > 0) {
        const double target = tol * scale;
        int sweep = 0;
        bool polish = false;  // one extra sweep after the target is met: the
                              // quadratic tail pushes eigenvalues well past tol,
                              // so downstream sign thresholds have real margin
        while (offdiag_norm(a, n) >= target || !polish) {
            if (offdiag_norm(a, n) < target) polish = true;
            if (++sweep > kMaxSweeps)
                throw std::runtime_error("jacobi eigensolver failed to converge (bug)");
            for (int p = 0; p < n; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = a[static_cast<std::size_t>(p) * n + q];
                    if (apq == 0) continue;
                    const double app = a[static_cast<std::size_t>(p) * n + p];
                    const double aqq = a[static_cast<std::size_t>(q) * n + q];
                    const double theta = (aqq - app) / (2 * apq);
                    const double t = (theta >= 0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1));
                    const double c = 1 / std::sqrt(t * t + 1);
                    const double s = t * c;
                    for (int k = 0; k < n; ++k) {
                        const double akp = a[static_cast<std::size_t>(k) * n + p];
                        const double akq = a[static_cast<std::size_t>(k) * n + q];
                        a[static_cast<std::size_t>(k) * n + p] = c * akp - s * akq;
                        a[static_cast<std::size_t>(k) * n + q] = s * akp + c * akq;
                    }
                    for (int k = 0; k < n; ++k) {
                        const double apk = a[static_cast<std::size_t>(p) * n + k];
                        const double aqk = a[static_cast<std::size_t>(q) * n + k];
                        a[static_cast<std::size_t>(p) * n + k] = c * apk - s * aqk;
                        a[static_cast<std::size_t>(q) * n + k] = s * apk + c * aqk;
                    }
                }
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
    return Spectrum::from_values(std::move(eig), tol);
}

Inertia sign_counts(const Spectrum& s, double threshold) {
    Inertia out;
    for (double v : s.values()) {
        if (v > threshold)
            ++out.n_plus;
        else if (v < -threshold)
            ++out.n_minus;
        else
            ++out.n_zero;
    }
    return out;
}

}  // namespace inertial
