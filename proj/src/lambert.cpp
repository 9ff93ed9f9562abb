#include "nomafair/lambert.hpp"

#include <cmath>
#include <stdexcept>

namespace nomafair {

namespace {

constexpr int kMaxIter = 100;
constexpr double kStepTol = 1e-14;

}  // namespace

double lambert_w0(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("lambert_w0: x must be finite and >= 0");
    if (x == 0.0) return 0.0;

    // ln(1+x) is a global over-estimate of W on x >= 0 and Halley's method
    // converges monotonically from it.
    double w = std::log1p(x);
    for (int i = 0; i < kMaxIter; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= kStepTol * (1.0 + std::abs(w))) break;
    }
    return w;
}

double lambert_w0_ln(double ln_x) {
    if (!std::isfinite(ln_x))
        throw std::invalid_argument("lambert_w0_ln: ln_x must be finite");
    if (ln_x <= 700.0) return lambert_w0(std::exp(ln_x));

    // Asymptotic start W ~ L1 - L2 + L2/L1, then Halley on
    // h(w) = w + ln(w) - ln_x, which never leaves the log domain.
    const double l1 = ln_x;
    const double l2 = std::log(ln_x);
    double w = l1 - l2 + l2 / l1;
    for (int i = 0; i < kMaxIter; ++i) {
        const double h = w + std::log(w) - ln_x;
        const double d1 = 1.0 + 1.0 / w;
        const double d2 = -1.0 / (w * w);
        const double step = 2.0 * h * d1 / (2.0 * d1 * d1 - h * d2);
        w -= step;
        if (std::abs(step) <= kStepTol * (1.0 + std::abs(w))) break;
    }
    return w;
}

}  // namespace nomafair
