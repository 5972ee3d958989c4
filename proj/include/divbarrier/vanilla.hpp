#pragma once

#include "divbarrier/dividend_adjust.hpp"
#include "divbarrier/instruments.hpp"

namespace divbarrier {

/// Validated inputs for the closed-form vanilla price.
struct BsInputs {
    double spot;
    double strike;
    double rate;
    double vol;
    double maturity;

    BsInputs(double spot_, double strike_, double rate_, double vol_,
             double maturity_);
};

/// Black-Scholes price:
///   call = S Phi(b1) - K e^{-rT} Phi(b2)
///   put  = K e^{-rT} Phi(-b2) - S Phi(-b1)
/// with b1 = (ln(S/K) + (r + sigma^2/2) T) / (sigma sqrt(T)),
/// b2 = b1 - sigma sqrt(T).
double bs_price(const BsInputs& inputs, OptionSide side);

/// Vanilla price under a dividend-adjustment method: bs_price on the
/// adjusted (spot', strike', vol') triple. HybridVA supports calls only.
double price_vanilla(Method method, const MarketState& market,
                     const VanillaContract& contract,
                     const DividendSchedule& schedule);

} // namespace divbarrier
