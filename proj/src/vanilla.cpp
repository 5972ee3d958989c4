#include "divbarrier/vanilla.hpp"

#include <cmath>

#include "divbarrier/math.hpp"

namespace divbarrier {

BsInputs::BsInputs(double spot_, double strike_, double rate_, double vol_,
                   double maturity_)
    : spot(spot_), strike(strike_), rate(rate_), vol(vol_), maturity(maturity_) {
    if (!std::isfinite(spot) || !std::isfinite(strike) || !std::isfinite(rate) ||
        !std::isfinite(vol) || !std::isfinite(maturity)) {
        throw ValidationError("BsInputs: all fields must be finite");
    }
    if (!(spot > 0.0)) throw ValidationError("BsInputs: spot must be > 0");
    if (!(strike > 0.0)) throw ValidationError("BsInputs: strike must be > 0");
    if (!(vol > 0.0)) throw ValidationError("BsInputs: vol must be > 0");
    if (!(maturity > 0.0)) throw ValidationError("BsInputs: maturity must be > 0");
}

double bs_price(const BsInputs& in, OptionSide side) {
    const double vol_sqrt_t = in.vol * std::sqrt(in.maturity);
    const double b1 = (std::log(in.spot / in.strike) +
                       (in.rate + 0.5 * in.vol * in.vol) * in.maturity) /
                      vol_sqrt_t;
    const double b2 = b1 - vol_sqrt_t;
    const double df = std::exp(-in.rate * in.maturity);
    if (side == OptionSide::Call) {
        return in.spot * norm_cdf(b1) - in.strike * df * norm_cdf(b2);
    }
    return in.strike * df * norm_cdf(-b2) - in.spot * norm_cdf(-b1);
}

double price_vanilla(Method method, const MarketState& market,
                     const VanillaContract& contract,
                     const DividendSchedule& schedule) {
    if (method == Method::HybridVA && contract.side == OptionSide::Put) {
        throw UnsupportedError(
            "price_vanilla: hybrid-va puts are not supported; the hybrid VA "
            "scheme is defined for calls only");
    }
    const AdjustedParams p = adjust_params(method, market, contract, schedule);
    return bs_price(BsInputs(p.spot_adj, p.strike_adj, market.rate, p.vol_adj,
                             contract.maturity),
                    contract.side);
}

} // namespace divbarrier
