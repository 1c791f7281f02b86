#pragma once

#include <cstdint>
#include <vector>

#include "invstat/market_data.hpp"

namespace invstat {

// Leverage correlation L(tau) = <r^2(t+tau) r(t)> / <r^2(t)>^2 with the
// stationary whole-series normalization.
struct LeverageCurve {
    int dt = 1;  // return horizon; only daily returns are computed here
    std::vector<int> taus;
    std::vector<double> values;
    std::vector<double> std_errors;  // per-lag, from the per-term product variance
    std::vector<std::int64_t> n_terms;
    std::vector<bool> reliable;  // n_terms >= min_terms

    static constexpr std::int64_t kMinTerms = 100;
};

// Negative tau correlates past volatility with future returns (t+tau >= 0).
// Lags with fewer than kMinTerms terms are flagged unreliable, not errors.
LeverageCurve leverage(const ReturnSeries& r, int tau_lo, int tau_hi);

}  // namespace invstat
