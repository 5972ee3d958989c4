#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "divbarrier/errors.hpp"

namespace divbarrier {

/// Flat-parameter market snapshot: spot, continuously compounded rate,
/// lognormal volatility. Immutable after construction.
struct MarketState {
    double spot;
    double rate;
    double vol;

    MarketState(double spot_, double rate_, double vol_);
};

/// One cash dividend: paid at `time` years, drops the stock by `amount`.
/// Raw entries are unvalidated; normalize_schedule enforces the invariants.
struct Dividend {
    double time{0.0};
    double amount{0.0};
};

/// Ordered cash dividend stream. After normalize_schedule the entries are
/// strictly increasing in time, all within (0, maturity], all amounts > 0.
struct DividendSchedule {
    std::vector<Dividend> entries;

    bool empty() const noexcept { return entries.empty(); }
    std::size_t size() const noexcept { return entries.size(); }
};

enum class OptionSide { Call, Put };

struct VanillaContract {
    double strike;
    double maturity;
    OptionSide side;

    VanillaContract(double strike_, double maturity_, OptionSide side_);
};

enum class BarrierStyle { UpAndOut };

struct BarrierContract {
    VanillaContract vanilla;
    double barrier_level;
    double rebate;
    BarrierStyle style;

    BarrierContract(VanillaContract vanilla_, double barrier_level_,
                    double rebate_ = 0.0,
                    BarrierStyle style_ = BarrierStyle::UpAndOut);
};

/// Sorts entries by time, merges same-time payments additively, drops
/// zero amounts and anything paid strictly after `maturity` (a payment
/// exactly at maturity is kept). Throws ValidationError on non-positive
/// times or negative amounts. `dropped_after_maturity`, when given,
/// receives the number of truncated entries.
DividendSchedule normalize_schedule(const DividendSchedule& schedule,
                                    double maturity,
                                    int* dropped_after_maturity = nullptr);

/// Throws ValidationError unless `schedule` is in normalized form for
/// `maturity`. Pricing entry points call this to enforce their
/// preconditions cheaply.
void require_normalized(const DividendSchedule& schedule, double maturity);

/// Schedule text format: one `time,amount` pair per line, CSV, header
/// optional. Blank lines are ignored.
DividendSchedule parse_schedule_csv(std::istream& in);
DividendSchedule load_schedule_csv(const std::string& path);

} // namespace divbarrier
