#include "nomafair/fairness.hpp"

#include <cmath>
#include <stdexcept>

#include "nomafair/lambert.hpp"
#include "nomafair/rates.hpp"

namespace nomafair {

namespace {

void check_ssr_domain(double alpha1, double gamma, const char* who) {
    if (!(alpha1 >= 0.0 && alpha1 <= 0.5))
        throw std::invalid_argument(std::string(who) + ": alpha1 must be in [0, 0.5]");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument(std::string(who) + ": gamma must be positive and finite");
}

// Bisection of ssr_oma - ssr_noma on (delta, 0.5 - delta). The proof of the
// threshold guarantees exactly one sign change there: positive near 0,
// negative at 0.5.
double beta_bisect(double gamma) {
    constexpr double kDelta = 1e-9;
    double lo = kDelta;
    double hi = 0.5 - kDelta;
    double flo = ssr_oma(lo, gamma) - ssr_noma(lo, gamma);
    if (flo <= 0.0) return lo;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = ssr_oma(mid, gamma) - ssr_noma(mid, gamma);
        if (fmid > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double jains_index(std::span<const double> rates) {
    if (rates.empty())
        throw std::invalid_argument("jains_index: empty rate list");
    double sum = 0.0, sumsq = 0.0;
    for (double r : rates) {
        if (!(r >= 0.0) || !std::isfinite(r))
            throw std::invalid_argument("jains_index: rates must be finite and >= 0");
        sum += r;
        sumsq += r * r;
    }
    if (sumsq == 0.0)
        throw std::invalid_argument("jains_index: all rates are zero");
    return sum * sum / (static_cast<double>(rates.size()) * sumsq);
}

double ssr_oma(double alpha1, double gamma) {
    check_ssr_domain(alpha1, gamma, "ssr_oma");
    const double l = log2_1p(gamma);
    return l * l * (1.0 + 2.0 * alpha1 * alpha1 - 2.0 * alpha1);
}

double ssr_noma(double alpha1, double gamma) {
    check_ssr_domain(alpha1, gamma, "ssr_noma");
    const double l = log2_1p(gamma);
    const double m = log2_1p(gamma * alpha1);
    return l * l + 2.0 * m * m - 2.0 * l * m;
}

double beta_exact(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("beta_exact: gamma must be positive and finite");

    // Natural logs throughout: the SSR equality reduces to
    // 1 + Gamma*alpha1 = (1+Gamma)^(1-alpha1), whose solution is the W form
    // below with ln(). The W argument is assembled in the log domain because
    // (1+Gamma)^(1+1/Gamma) overflows once Gamma * ln(Gamma) passes ~709.
    const double l = std::log1p(gamma);
    const double ln_arg = (1.0 + 1.0 / gamma) * l + std::log(l / gamma);
    const double w = lambert_w0_ln(ln_arg);
    double beta = w / l - 1.0 / gamma;

    const double scale = log2_1p(gamma);
    bool ok = beta > 0.0 && beta < 0.5;
    if (ok) {
        const double residual = std::abs(ssr_oma(beta, gamma) - ssr_noma(beta, gamma));
        ok = residual <= 1e-8 * scale * scale;
    }
    if (!ok) beta = beta_bisect(gamma);
    return beta;
}

double beta_high_snr(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("beta_high_snr: gamma must be positive and finite");
    const double l = std::log1p(gamma);
    return lambert_w0(l) / l;
}

FairnessDecision noma_more_fair(const UserChannels& pair) {
    if (pair.size() != 2)
        throw std::invalid_argument("noma_more_fair: exactly two users required");

    const FairnessContext ctx = normalized_gains(pair);
    FairnessDecision d;
    d.beta = beta_exact(ctx.gamma);
    d.beta_high_snr = beta_high_snr(ctx.gamma);
    d.ratio_threshold = d.beta / (1.0 - d.beta);
    d.noma_more_fair = pair.gains()[0] / pair.gains()[1] <= d.ratio_threshold;
    return d;
}

}  // namespace nomafair
