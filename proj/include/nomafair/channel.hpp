#pragma once

#include <cstddef>
#include <vector>

namespace nomafair {

enum class Scheme { kNoma, kOma };

const char* scheme_name(Scheme s);

/// Channel state of the users sharing one subcarrier: channel power gains
/// |h_k|^2 held sorted ascending, the common per-user transmit power and the
/// noise power (both linear milliwatts). `order()[i]` gives the original
/// user id of sorted slot i, so rates can be reported in input order.
class UserChannels {
public:
    /// `gains` are given in original user order and may be unsorted.
    /// Throws std::invalid_argument on an empty list or any non-positive
    /// or non-finite value.
    UserChannels(std::vector<double> gains, double p0_mw, double noise_mw);

    std::size_t size() const { return gains_.size(); }
    const std::vector<double>& gains() const { return gains_; }
    double p0_mw() const { return p0_mw_; }
    double noise_mw() const { return noise_mw_; }
    const std::vector<std::size_t>& order() const { return order_; }

private:
    std::vector<double> gains_;   // ascending
    double p0_mw_;
    double noise_mw_;
    std::vector<std::size_t> order_;
};

/// Aggregate SNR and normalized channel gains of one subcarrier.
/// alpha[k] = gain_k / sum(gains) in sorted order; phi is the running sum
/// with phi[0] = 0 and phi[K] = 1.
struct FairnessContext {
    double gamma = 0.0;
    std::vector<double> alpha;
    std::vector<double> phi;
};

/// Per-user rates (bit/s/Hz) in original user order, tagged with the
/// multiple-access scheme that produced them.
struct RateAllocation {
    std::vector<double> rates;
    Scheme scheme = Scheme::kNoma;
    double sum_rate = 0.0;
};

}  // namespace nomafair
