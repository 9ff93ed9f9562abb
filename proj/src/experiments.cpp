#include "nomafair/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "nomafair/fairness.hpp"
#include "nomafair/rates.hpp"

namespace nomafair {

namespace {

// Static chunking over [0, n); each body call owns its slot, so no locking.
void for_each_trial(std::uint64_t n, unsigned threads,
                    const std::function<void(std::uint64_t)>& body) {
    if (threads <= 1 || n < 2) {
        for (std::uint64_t t = 0; t < n; ++t) body(t);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = n * w / workers;
            const std::uint64_t hi = n * (w + 1) / workers;
            for (std::uint64_t t = lo; t < hi; ++t) body(t);
        });
    }
}

void build_stats(RateDistribution& dist) {
    dist.jain = jains_index(dist.samples);
    dist.p10 = percentile(dist.samples, 0.10);

    constexpr std::size_t kBins = 100;
    const double top = *std::max_element(dist.samples.begin(), dist.samples.end());
    dist.bin_edges.resize(kBins + 1);
    for (std::size_t i = 0; i <= kBins; ++i)
        dist.bin_edges[i] = top * static_cast<double>(i) / kBins;
    dist.bin_mass.assign(kBins, 0.0);
    const double unit = 1.0 / static_cast<double>(dist.samples.size());
    for (double r : dist.samples) {
        auto idx = static_cast<std::size_t>(r / top * kBins);
        dist.bin_mass[std::min(idx, kBins - 1)] += unit;
    }
}

}  // namespace

RateAllocation hybrid_select(const UserChannels& pair) {
    if (pair.size() != 2)
        throw std::invalid_argument("hybrid_select: exactly two users required");
    const FairnessDecision d = noma_more_fair(pair);
    const double ratio = pair.gains()[0] / pair.gains()[1];
    return ratio < d.ratio_threshold ? noma_rates(pair) : oma_rates(pair);
}

SweepResult run_fairness_sweep(const SimConfig& cfg, std::span<const double> p0_grid_dbm,
                               unsigned threads) {
    cfg.validate();
    if (p0_grid_dbm.empty())
        throw std::invalid_argument("run_fairness_sweep: empty P0 grid");

    const std::uint64_t n = cfg.trials.value_or(kDefaultSweepTrials);
    SweepResult out;
    out.points.reserve(p0_grid_dbm.size());

    for (std::size_t ip = 0; ip < p0_grid_dbm.size(); ++ip) {
        SimConfig point = cfg;
        point.p0_dbm = p0_grid_dbm[ip];
        const double p0 = point.p0_mw();
        const double noise = point.noise_mw();

        enum : std::uint8_t { kMetric = 1, kHsnr = 2, kActual = 4, kTie = 8 };
        std::vector<std::uint8_t> flags(n, 0);
        for_each_trial(n, threads, [&](std::uint64_t t) {
            Rng rng(cfg.seed, ip * n + t);
            double ga = channel_gain(random_distance(point, rng), point.fading, rng,
                                     point.min_distance_m);
            double gb = channel_gain(random_distance(point, rng), point.fading, rng,
                                     point.min_distance_m);
            const UserChannels pair({ga, gb}, p0, noise);
            const FairnessDecision d = noma_more_fair(pair);
            const double ratio = pair.gains()[0] / pair.gains()[1];

            const double jn = jains_index(noma_rates(pair).rates);
            const double jo = jains_index(oma_rates(pair).rates);

            std::uint8_t f = 0;
            if (d.noma_more_fair) f |= kMetric;
            if (ratio <= d.beta_high_snr / (1.0 - d.beta_high_snr)) f |= kHsnr;
            if (jn >= jo) f |= kActual;
            if (std::abs(jn - jo) <= kJainTieTol) f |= kTie;
            flags[t] = f;
        });

        SweepPoint pt;
        pt.p0_dbm = p0_grid_dbm[ip];
        pt.n_trials = n;
        std::uint64_t cm = 0, ch = 0, ca = 0;
        for (std::uint8_t f : flags) {
            if (f & kMetric) ++cm;
            if (f & kHsnr) ++ch;
            if (f & kActual) ++ca;
            if (f & kTie)
                ++pt.n_ties;
            else if (static_cast<bool>(f & kMetric) != static_cast<bool>(f & kActual))
                ++pt.n_disagree;
        }
        const auto dn = static_cast<double>(n);
        pt.prob_metric = static_cast<double>(cm) / dn;
        pt.prob_metric_hsnr = static_cast<double>(ch) / dn;
        pt.prob_actual = static_cast<double>(ca) / dn;
        out.points.push_back(pt);
    }
    return out;
}

DistributionResult run_distribution(const SimConfig& cfg, unsigned threads) {
    cfg.validate();
    const std::uint64_t n = cfg.trials.value_or(kDefaultDistributionDrops);

    struct DropOut {
        std::vector<double> noma, oma, hybrid;
        std::uint64_t noma_picks = 0;
    };
    std::vector<DropOut> slots(n);

    for_each_trial(n, threads, [&](std::uint64_t t) {
        Rng rng(cfg.seed, t);
        const NetworkDrop drop = random_pairing(drop_users(cfg, rng), cfg, rng);
        DropOut& o = slots[t];
        const std::size_t users = 2 * cfg.n_subcarriers;
        o.noma.reserve(users);
        o.oma.reserve(users);
        o.hybrid.reserve(users);
        for (const UserChannels& pair : drop.subcarriers) {
            const RateAllocation rn = noma_rates(pair);
            const RateAllocation ro = oma_rates(pair);
            const RateAllocation rh = hybrid_select(pair);
            o.noma.insert(o.noma.end(), rn.rates.begin(), rn.rates.end());
            o.oma.insert(o.oma.end(), ro.rates.begin(), ro.rates.end());
            o.hybrid.insert(o.hybrid.end(), rh.rates.begin(), rh.rates.end());
            if (rh.scheme == Scheme::kNoma) ++o.noma_picks;
        }
    });

    DistributionResult out;
    out.n_drops = n;
    std::uint64_t picks = 0;
    for (const DropOut& o : slots) {  // drop order keeps aggregation deterministic
        out.noma.samples.insert(out.noma.samples.end(), o.noma.begin(), o.noma.end());
        out.oma.samples.insert(out.oma.samples.end(), o.oma.begin(), o.oma.end());
        out.hybrid.samples.insert(out.hybrid.samples.end(), o.hybrid.begin(), o.hybrid.end());
        picks += o.noma_picks;
    }
    out.noma_selection_fraction =
        static_cast<double>(picks) / static_cast<double>(n * cfg.n_subcarriers);
    build_stats(out.noma);
    build_stats(out.oma);
    build_stats(out.hybrid);
    return out;
}

double percentile(std::span<const double> samples, double q) {
    if (samples.empty())
        throw std::invalid_argument("percentile: empty sample list");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("percentile: q must be in [0, 1]");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace nomafair
