#pragma once

#include <cstdint>
#include <optional>

#include "divbarrier/instruments.hpp"
#include "divbarrier/math.hpp"

namespace divbarrier {

/// Simulation configuration. `steps_per_interval` fixes the number of
/// time steps inside every inter-dividend segment; when unset each
/// segment gets ceil(250 * segment length in years) steps (roughly daily
/// monitoring). Results are a pure function of this struct: identical
/// configs give bit-identical estimates, whatever the worker count.
struct McConfig {
    std::int64_t paths{1'000'000};
    std::optional<int> steps_per_interval{};
    std::uint64_t seed{0};
    bool antithetic{true};
    bool bridge_correction{true};
};

struct PriceEstimate {
    double mean{0.0};
    double std_error{0.0};
    std::int64_t paths_used{0};
    Probability knockout_fraction{};
};

/// Probability that a continuous geometric Brownian path crossed the
/// barrier inside one step, given both endpoints strictly below it:
/// exp(-2 (logB - logS_k)(logB - logS_{k+1}) / (vol^2 dt)), clamped to
/// [0, 1]. Endpoints at or above the barrier are a caller bug.
Probability bridge_crossing_prob(double log_start, double log_end,
                                 double log_barrier, double vol, double dt);

/// Benchmark estimate of the up-and-out call under GBM with discrete
/// dividend drops. Exact lognormal steps between event times; at each
/// dividend time the stock drops by the amount, floored at zero with
/// absorption. A path knocks out when a step endpoint reaches the
/// barrier or, with bridge_correction, by a Brownian-bridge crossing
/// draw; knocked-out paths pay the rebate discounted from the step
/// midpoint. Path randomness depends only on (seed, path index), so any
/// worker partitioning reproduces the same estimate bit for bit.
/// `workers` = 0 uses the hardware concurrency.
PriceEstimate simulate_uo_call(const MarketState& market,
                               const BarrierContract& contract,
                               const DividendSchedule& schedule,
                               const McConfig& config, unsigned workers = 0);

} // namespace divbarrier
