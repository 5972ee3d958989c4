#pragma once

#include <optional>
#include <string_view>

#include "divbarrier/instruments.hpp"

namespace divbarrier {

/// Weighting applied to each dividend inside the present-value sums.
/// Uniform uses weight 1; HybridSpot uses (T - t_i)/T, the share of the
/// dividend attributed to the spot shift; HybridStrike uses t_i/T, the
/// complementary share attributed to the strike shift.
enum class WeightMode { Uniform, HybridSpot, HybridStrike };

/// Dividend-adjustment scheme. Each variant maps to exactly one
/// (spot', strike', vol') rule:
///
///   NoAdjustment  (S, K, sigma)
///   Model1        (S - D, K, sigma)                     escrowed dividends
///   SpotVA        (S - D, K, sigma_S)                   spot shift + averaged vol
///   StrikeVA      (S, K + sum d_i e^{r(T-t_i)}, sigma_K)
///   Hybrid        (S - D_S, K + D_K e^{rT}, sigma)
///   HybridVA      (S - D_S, K + D_K e^{rT}, sigma_H)
///
/// where D is the discounted dividend sum, D_S/D_K its hybrid split, and
/// the sigma variants are the interval-averaged volatilities below.
enum class Method { NoAdjustment, Model1, SpotVA, StrikeVA, Hybrid, HybridVA };

/// The (spot', strike', vol') triple a method feeds into a
/// Black-Scholes-style formula.
struct AdjustedParams {
    double spot_adj;
    double strike_adj;
    double vol_adj;
};

/// Kebab-case name used by the CLI and reports: none, model1, spot-va,
/// strike-va, hybrid, hybrid-va.
std::string_view method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);

/// Sum of w_i * d_i * exp(-rate * t_i) over the normalized schedule,
/// with w_i per `mode`. Zero for an empty schedule.
double pv_dividends(const DividendSchedule& schedule, double rate,
                    double maturity, WeightMode mode);

/// Spot-side interval-averaged volatility:
///
///   sigma * sqrt( sum_j (S / (S - Dtail_j))^2 * (t_j - t_{j-1})/T
///                 + (T - t_N)/T )
///
/// where Dtail_j is the discounted weighted sum of dividends j..N still
/// outstanding during (t_{j-1}, t_j]. Modes: Uniform or HybridSpot.
/// Returns sigma unchanged for an empty schedule. Throws SingularityError
/// when the spot does not cover the outstanding discounted dividends.
double avg_vol_spot(const MarketState& market, const DividendSchedule& schedule,
                    double maturity, WeightMode mode);

/// Strike-side counterpart, built from prefix sums of already-paid
/// dividends; the ratio S/(S + Dpaid_j) is always well defined.
/// Modes: Uniform or HybridStrike. Returns sigma for an empty schedule.
double avg_vol_strike(const MarketState& market, const DividendSchedule& schedule,
                      double maturity, WeightMode mode);

/// Composed hybrid volatility sigma_S * sigma_K / sigma, with both
/// factors computed under their hybrid weights.
double hybrid_vol(const MarketState& market, const DividendSchedule& schedule,
                  double maturity);

/// Applies the method table above. Throws SingularityError (naming the
/// method) when the adjusted spot would be non-positive.
AdjustedParams adjust_params(Method method, const MarketState& market,
                             const VanillaContract& contract,
                             const DividendSchedule& schedule);

} // namespace divbarrier
