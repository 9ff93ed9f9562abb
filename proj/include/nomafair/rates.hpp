#pragma once

#include "nomafair/channel.hpp"

namespace nomafair {

/// log2(1 + x) evaluated through log1p so tiny x keeps full precision.
double log2_1p(double x);

/// Normalized gains alpha_k = |h_k|^2 / sum, the accumulated phi vector and
/// the aggregate SNR Gamma = (P0 / sigma^2) * sum |h_i|^2.
FairnessContext normalized_gains(const UserChannels& ch);

/// System sum rate log2(1 + Gamma), identical for NOMA and OMA under the
/// optimal resource allocation.
double sum_rate(const FairnessContext& ctx);

/// Per-user NOMA rates with SIC: user k (ascending-gain order) is decoded
/// after all stronger users, so it sees interference only from users 1..k-1.
/// Rates are returned in original user order.
RateAllocation noma_rates(const UserChannels& ch);

/// Per-user OMA rates under the optimal time-share alpha_k:
/// R_k = alpha_k * log2(1 + Gamma), in original user order.
RateAllocation oma_rates(const UserChannels& ch);

/// g(x) = log2(1 + Gamma x) on x in [0, 1]; the NOMA rate of user k equals
/// g(phi_k) - g(phi_{k-1}).
double g_map(double x, double gamma);

/// f(x) = x * log2(1 + Gamma) on x in [0, 1]; the OMA counterpart of g().
double f_map(double x, double gamma);

}  // namespace nomafair
