#include "nomafair/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace nomafair {

namespace {
constexpr double kInvLn2 = 1.4426950408889634074;
}

double log2_1p(double x) { return std::log1p(x) * kInvLn2; }

FairnessContext normalized_gains(const UserChannels& ch) {
    const auto& g = ch.gains();
    const std::size_t k = g.size();

    double total = 0.0;
    for (double gi : g) total += gi;

    FairnessContext ctx;
    ctx.gamma = ch.p0_mw() / ch.noise_mw() * total;
    ctx.alpha.resize(k);
    ctx.phi.resize(k + 1);
    ctx.phi[0] = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        ctx.alpha[i] = g[i] / total;
        ctx.phi[i + 1] = ctx.phi[i] + ctx.alpha[i];
    }
    ctx.phi[k] = 1.0;  // absorb cumulative rounding
    return ctx;
}

double sum_rate(const FairnessContext& ctx) { return log2_1p(ctx.gamma); }

RateAllocation noma_rates(const UserChannels& ch) {
    const auto& g = ch.gains();
    const double p0 = ch.p0_mw();
    const double noise = ch.noise_mw();

    RateAllocation out;
    out.scheme = Scheme::kNoma;
    out.rates.resize(g.size());

    double cum = 0.0;  // interference from users already counted below user k
    for (std::size_t k = 0; k < g.size(); ++k) {
        out.rates[ch.order()[k]] = log2_1p(p0 * g[k] / (p0 * cum + noise));
        cum += g[k];
    }
    out.sum_rate = log2_1p(p0 / noise * cum);
    return out;
}

RateAllocation oma_rates(const UserChannels& ch) {
    const FairnessContext ctx = normalized_gains(ch);
    const double rsum = sum_rate(ctx);

    RateAllocation out;
    out.scheme = Scheme::kOma;
    out.sum_rate = rsum;
    out.rates.resize(ch.size());
    for (std::size_t k = 0; k < ch.size(); ++k)
        out.rates[ch.order()[k]] = ctx.alpha[k] * rsum;
    return out;
}

double g_map(double x, double gamma) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("g_map: x must be in [0, 1]");
    if (!(gamma > 0.0))
        throw std::invalid_argument("g_map: gamma must be positive");
    return log2_1p(gamma * x);
}

double f_map(double x, double gamma) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("f_map: x must be in [0, 1]");
    if (!(gamma > 0.0))
        throw std::invalid_argument("f_map: gamma must be positive");
    return x * log2_1p(gamma);
}

}  // namespace nomafair
