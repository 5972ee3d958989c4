#pragma once

#include "divbarrier/dividend_adjust.hpp"
#include "divbarrier/instruments.hpp"

namespace divbarrier {

/// Term breakdown of the up-and-out call closed form. The five value
/// terms are named t_a..t_f (the conventional A..F labels collide with
/// the barrier level B).
struct BarrierTerms {
    double t_a;
    double t_b;
    double t_c;
    double t_d;
    double t_f;
    double x1;
    double x2;
    double y1;
    double y2;
    double z;
    double mu;
    double lambda;
};

/// Set when a pricing call short-circuits.
struct BarrierDiagnostics {
    bool knocked_out_at_inception{false};
};

/// Computes all terms of the up-and-out call formula with cost of carry
/// `carry`; mu = (carry - vol^2/2)/vol^2, lambda = sqrt(mu^2 + 2 rate/vol^2).
/// Requires 0 < spot < barrier_level; throws KnockedOutError otherwise.
BarrierTerms uo_call_terms(double spot, double strike, double barrier_level,
                           double rebate, double rate, double carry,
                           double vol, double maturity);

/// Up-and-out call price: t_f when strike >= barrier, otherwise
/// t_a - t_b + t_c - t_d + t_f, clamped at zero against rounding.
/// Spot at or above the barrier returns the rebate immediately and, when
/// `diag` is given, flags it.
double uo_call_price(double spot, double strike, double barrier_level,
                     double rebate, double rate, double carry, double vol,
                     double maturity, BarrierDiagnostics* diag = nullptr);

/// Applies a dividend-adjustment method to the up-and-out call: the
/// adjusted spot, strike, and volatility feed the closed form while the
/// barrier level and rebate pass through unadjusted. Calls only.
double price_barrier(Method method, const MarketState& market,
                     const BarrierContract& contract,
                     const DividendSchedule& schedule,
                     BarrierDiagnostics* diag = nullptr);

} // namespace divbarrier
