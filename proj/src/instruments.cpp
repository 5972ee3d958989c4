#include "divbarrier/instruments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace divbarrier {

namespace {

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(what) + " must be finite");
    }
}

} // namespace

MarketState::MarketState(double spot_, double rate_, double vol_)
    : spot(spot_), rate(rate_), vol(vol_) {
    check_finite(spot, "MarketState: spot");
    check_finite(rate, "MarketState: rate");
    check_finite(vol, "MarketState: vol");
    if (!(spot > 0.0)) throw ValidationError("MarketState: spot must be > 0");
    if (!(vol > 0.0)) throw ValidationError("MarketState: vol must be > 0");
}

VanillaContract::VanillaContract(double strike_, double maturity_, OptionSide side_)
    : strike(strike_), maturity(maturity_), side(side_) {
    check_finite(strike, "VanillaContract: strike");
    check_finite(maturity, "VanillaContract: maturity");
    if (!(strike > 0.0)) throw ValidationError("VanillaContract: strike must be > 0");
    if (!(maturity > 0.0)) throw ValidationError("VanillaContract: maturity must be > 0");
}

BarrierContract::BarrierContract(VanillaContract vanilla_, double barrier_level_,
                                 double rebate_, BarrierStyle style_)
    : vanilla(vanilla_), barrier_level(barrier_level_), rebate(rebate_), style(style_) {
    check_finite(barrier_level, "BarrierContract: barrier_level");
    check_finite(rebate, "BarrierContract: rebate");
    if (!(barrier_level > 0.0)) {
        throw ValidationError("BarrierContract: barrier_level must be > 0");
    }
    if (!(rebate >= 0.0)) throw ValidationError("BarrierContract: rebate must be >= 0");
}

DividendSchedule normalize_schedule(const DividendSchedule& schedule, double maturity,
                                    int* dropped_after_maturity) {
    check_finite(maturity, "normalize_schedule: maturity");
    if (!(maturity > 0.0)) {
        throw ValidationError("normalize_schedule: maturity must be > 0");
    }
    for (const auto& d : schedule.entries) {
        check_finite(d.time, "normalize_schedule: dividend time");
        check_finite(d.amount, "normalize_schedule: dividend amount");
        if (!(d.time > 0.0)) {
            throw ValidationError("normalize_schedule: dividend times must be > 0");
        }
        if (!(d.amount >= 0.0)) {
            throw ValidationError("normalize_schedule: dividend amounts must be >= 0");
        }
    }

    std::vector<Dividend> sorted = schedule.entries;
    std::sort(sorted.begin(), sorted.end(),
              [](const Dividend& a, const Dividend& b) { return a.time < b.time; });

    DividendSchedule out;
    int dropped = 0;
    for (const auto& d : sorted) {
        if (d.time > maturity) {
            ++dropped;
            continue;
        }
        if (!out.entries.empty() && out.entries.back().time == d.time) {
            out.entries.back().amount += d.amount; // same-time payments add exactly
        } else {
            out.entries.push_back(d);
        }
    }
    std::erase_if(out.entries, [](const Dividend& d) { return d.amount == 0.0; });

    if (dropped_after_maturity != nullptr) *dropped_after_maturity = dropped;
    return out;
}

void require_normalized(const DividendSchedule& schedule, double maturity) {
    if (!(maturity > 0.0) || !std::isfinite(maturity)) {
        throw ValidationError("schedule check: maturity must be a positive finite number");
    }
    double prev = 0.0;
    for (const auto& d : schedule.entries) {
        if (!std::isfinite(d.time) || !std::isfinite(d.amount) || !(d.time > prev) ||
            !(d.time <= maturity) || !(d.amount > 0.0)) {
            throw ValidationError(
                "schedule is not normalized for this maturity; call normalize_schedule first");
        }
        prev = d.time;
    }
}

namespace {

bool parse_double(const std::string& token, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(token, &pos);
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        return pos == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

DividendSchedule parse_schedule_csv(std::istream& in) {
    DividendSchedule schedule;
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;

        std::istringstream fields(line);
        std::string time_tok, amount_tok;
        std::getline(fields, time_tok, ',');
        std::getline(fields, amount_tok);

        double t = 0.0;
        double a = 0.0;
        const bool ok = parse_double(time_tok, t) && parse_double(amount_tok, a);
        if (!ok) {
            if (first_content) { // optional header line
                first_content = false;
                continue;
            }
            throw ValidationError("schedule CSV: malformed line " + std::to_string(lineno) +
                                  ": '" + line + "'");
        }
        first_content = false;
        schedule.entries.push_back({t, a});
    }
    return schedule;
}

DividendSchedule load_schedule_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("schedule CSV: cannot open '" + path + "'");
    return parse_schedule_csv(in);
}

} // namespace divbarrier
