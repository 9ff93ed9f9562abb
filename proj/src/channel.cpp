#include "nomafair/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nomafair {

const char* scheme_name(Scheme s) {
    return s == Scheme::kNoma ? "NOMA" : "OMA";
}

UserChannels::UserChannels(std::vector<double> gains, double p0_mw, double noise_mw)
    : p0_mw_(p0_mw), noise_mw_(noise_mw) {
    if (gains.empty())
        throw std::invalid_argument("UserChannels: need at least one user");
    for (double g : gains)
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::invalid_argument("UserChannels: gains must be positive and finite");
    if (!(p0_mw > 0.0) || !std::isfinite(p0_mw))
        throw std::invalid_argument("UserChannels: transmit power must be positive and finite");
    if (!(noise_mw > 0.0) || !std::isfinite(noise_mw))
        throw std::invalid_argument("UserChannels: noise power must be positive and finite");

    order_.resize(gains.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    // Ties broken by original index.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return gains[a] < gains[b]; });
    gains_.resize(gains.size());
    for (std::size_t i = 0; i < gains.size(); ++i) gains_[i] = gains[order_[i]];
}

}  // namespace nomafair
