#include "divbarrier/dividend_adjust.hpp"

#include <cmath>
#include <vector>

namespace divbarrier {

std::string_view method_name(Method method) {
    switch (method) {
        case Method::NoAdjustment: return "none";
        case Method::Model1: return "model1";
        case Method::SpotVA: return "spot-va";
        case Method::StrikeVA: return "strike-va";
        case Method::Hybrid: return "hybrid";
        case Method::HybridVA: return "hybrid-va";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "none") return Method::NoAdjustment;
    if (name == "model1") return Method::Model1;
    if (name == "spot-va") return Method::SpotVA;
    if (name == "strike-va") return Method::StrikeVA;
    if (name == "hybrid") return Method::Hybrid;
    if (name == "hybrid-va") return Method::HybridVA;
    return std::nullopt;
}

namespace {

double weight(WeightMode mode, double time, double maturity) {
    switch (mode) {
        case WeightMode::Uniform: return 1.0;
        case WeightMode::HybridSpot: return (maturity - time) / maturity;
        case WeightMode::HybridStrike: return time / maturity;
    }
    return 1.0;
}

} // namespace

double pv_dividends(const DividendSchedule& schedule, double rate, double maturity,
                    WeightMode mode) {
    require_normalized(schedule, maturity);
    double acc = 0.0;
    for (const auto& d : schedule.entries) {
        acc += weight(mode, d.time, maturity) * d.amount * std::exp(-rate * d.time);
    }
    return acc;
}

double avg_vol_spot(const MarketState& market, const DividendSchedule& schedule,
                    double maturity, WeightMode mode) {
    if (mode == WeightMode::HybridStrike) {
        throw ValidationError("avg_vol_spot: mode must be Uniform or HybridSpot");
    }
    require_normalized(schedule, maturity);
    if (schedule.empty()) return market.vol;

    const double spot = market.spot;
    const std::size_t n = schedule.size();

    // tail[j] = discounted weighted dividends still outstanding during
    // the j-th inter-dividend interval
    std::vector<double> tail(n + 1, 0.0);
    for (std::size_t j = n; j-- > 0;) {
        const auto& d = schedule.entries[j];
        tail[j] = tail[j + 1] +
                  weight(mode, d.time, maturity) * d.amount * std::exp(-market.rate * d.time);
    }
    if (!(spot > tail[0])) {
        throw SingularityError("avg_vol_spot: spot does not cover discounted dividends");
    }

    double acc = 0.0;
    double prev_time = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double factor = spot / (spot - tail[j]);
        acc += factor * factor * (schedule.entries[j].time - prev_time) / maturity;
        prev_time = schedule.entries[j].time;
    }
    acc += (maturity - prev_time) / maturity;
    return market.vol * std::sqrt(acc);
}

double avg_vol_strike(const MarketState& market, const DividendSchedule& schedule,
                      double maturity, WeightMode mode) {
    if (mode == WeightMode::HybridSpot) {
        throw ValidationError("avg_vol_strike: mode must be Uniform or HybridStrike");
    }
    require_normalized(schedule, maturity);
    if (schedule.empty()) return market.vol;

    const double spot = market.spot;
    const std::size_t n = schedule.size();

    // no dividends have been paid yet on (0, t_1]
    double acc = schedule.entries[0].time / maturity;
    double paid = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& d = schedule.entries[j];
        paid += weight(mode, d.time, maturity) * d.amount * std::exp(-market.rate * d.time);
        const double next_time = (j + 1 < n) ? schedule.entries[j + 1].time : maturity;
        const double factor = spot / (spot + paid);
        acc += factor * factor * (next_time - d.time) / maturity;
    }
    return market.vol * std::sqrt(acc);
}

double hybrid_vol(const MarketState& market, const DividendSchedule& schedule,
                  double maturity) {
    const double vol_spot = avg_vol_spot(market, schedule, maturity, WeightMode::HybridSpot);
    const double vol_strike =
        avg_vol_strike(market, schedule, maturity, WeightMode::HybridStrike);
    return vol_spot * vol_strike / market.vol;
}

AdjustedParams adjust_params(Method method, const MarketState& market,
                             const VanillaContract& contract,
                             const DividendSchedule& schedule) {
    const double maturity = contract.maturity;
    require_normalized(schedule, maturity);

    const auto check_spot = [&](double spot_adj) {
        if (!(spot_adj > 0.0)) {
            throw SingularityError(std::string(method_name(method)) +
                                   ": adjusted spot is not positive; dividends exceed spot");
        }
    };

    switch (method) {
        case Method::NoAdjustment:
            return {market.spot, contract.strike, market.vol};
        case Method::Model1: {
            const double pv = pv_dividends(schedule, market.rate, maturity, WeightMode::Uniform);
            const double spot_adj = market.spot - pv;
            check_spot(spot_adj);
            return {spot_adj, contract.strike, market.vol};
        }
        case Method::SpotVA: {
            const double pv = pv_dividends(schedule, market.rate, maturity, WeightMode::Uniform);
            const double spot_adj = market.spot - pv;
            check_spot(spot_adj);
            return {spot_adj, contract.strike,
                    avg_vol_spot(market, schedule, maturity, WeightMode::Uniform)};
        }
        case Method::StrikeVA: {
            double strike_adj = contract.strike;
            for (const auto& d : schedule.entries) {
                strike_adj += d.amount * std::exp(market.rate * (maturity - d.time));
            }
            return {market.spot, strike_adj,
                    avg_vol_strike(market, schedule, maturity, WeightMode::Uniform)};
        }
        case Method::Hybrid:
        case Method::HybridVA: {
            const double pv_spot =
                pv_dividends(schedule, market.rate, maturity, WeightMode::HybridSpot);
            const double pv_strike =
                pv_dividends(schedule, market.rate, maturity, WeightMode::HybridStrike);
            const double spot_adj = market.spot - pv_spot;
            check_spot(spot_adj);
            const double strike_adj =
                contract.strike + pv_strike * std::exp(market.rate * maturity);
            const double vol_adj = (method == Method::Hybrid)
                                       ? market.vol
                                       : hybrid_vol(market, schedule, maturity);
            return {spot_adj, strike_adj, vol_adj};
        }
    }
    throw ValidationError("adjust_params: unknown method");
}

} // namespace divbarrier
