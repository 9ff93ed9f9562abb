#pragma once

#include <span>

#include "nomafair/channel.hpp"

namespace nomafair {

/// Outcome of the two-user fairness comparison: the threshold beta on the
/// weak user's normalized gain, its high-SNR approximation, the equivalent
/// threshold beta/(1-beta) on the gain ratio |h_1|^2/|h_2|^2, and the
/// verdict. NOMA is the fairer scheme (by Jain's index) exactly when the
/// gain ratio is at or below the threshold.
struct FairnessDecision {
    double beta = 0.0;
    double beta_high_snr = 0.0;
    double ratio_threshold = 0.0;
    bool noma_more_fair = false;
};

/// Jain's index (sum r)^2 / (K * sum r^2), in [1/K, 1]. Requires a
/// non-empty list of non-negative rates with at least one positive entry.
double jains_index(std::span<const double> rates);

/// Sum of squared individual rates for two-user OMA as a function of the
/// weak user's normalized gain alpha1 in [0, 0.5]:
///   (log2(1+Gamma))^2 * (1 + 2 alpha1^2 - 2 alpha1).
double ssr_oma(double alpha1, double gamma);

/// Two-user NOMA counterpart:
///   (log2(1+Gamma))^2 + 2 m^2 - 2 m log2(1+Gamma),  m = log2(1+Gamma alpha1).
double ssr_noma(double alpha1, double gamma);

/// The unique alpha1 in (0, 0.5) where ssr_oma == ssr_noma:
///   beta = W((1+Gamma)^(1+1/Gamma) ln(1+Gamma) / Gamma) / ln(1+Gamma) - 1/Gamma.
/// Falls back to bisection of the SSR equality if the closed form's residual
/// exceeds 1e-8 relative to (log2(1+Gamma))^2.
double beta_exact(double gamma);

/// High-SNR approximation W(ln(1+Gamma)) / ln(1+Gamma).
double beta_high_snr(double gamma);

/// Evaluates the threshold test for a two-user channel. Throws for K != 2.
FairnessDecision noma_more_fair(const UserChannels& pair);

}  // namespace nomafair
