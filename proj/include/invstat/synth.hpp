#pragma once

#include <cstdint>

#include "invstat/market_data.hpp"
#include "invstat/rng.hpp"

namespace invstat {

// i.i.d. normal(0, sigma^2) daily returns. The induced log-price walk has
// Var[s(t+tau) - s(t)] = sigma^2 * tau, i.e. diffusion constant D = sigma^2/2.
ReturnSeries gen_gaussian_returns(std::size_t n, double sigma, RngStream stream);

// i.i.d. scaled Student-t returns, t = scale * Z / sqrt(V/nu) with V ~ chi^2_nu.
// Unscaled variance is nu/(nu-2); requires nu > 2.
ReturnSeries gen_student_t_returns(std::size_t n, double nu, double scale, RngStream stream);

struct DropReboundParams {
    double sigma = 0.01;
    double drop_magnitude = 0.05;
    std::size_t rebound_len = 10;
    double drop_prob = 0.02;
};

// Baseline gaussian returns with planted crash/recovery structures: with
// probability drop_prob per (eligible) day the return is replaced by
// -drop_magnitude followed by rebound_len days of +drop_magnitude/rebound_len.
// Injections never overlap and never run past the series end, so each block
// sums to exactly zero.
ReturnSeries gen_drop_rebound_returns(std::size_t n, const DropReboundParams& params,
                                      RngStream stream);

// Convenience stream constructors with the standard purpose keys, so the CLI,
// tests and bindings all derive identical streams from a master seed.
RngStream gaussian_stream(std::uint64_t master_seed);
RngStream student_t_stream(std::uint64_t master_seed);
RngStream drop_rebound_stream(std::uint64_t master_seed);

// Wraps generated returns into a PriceSeries: consecutive business days from
// `origin`, prices S(0) = s0 and S(t+1) = S(t) * exp(r(t)).
PriceSeries to_price_series(const ReturnSeries& r, const Date& origin, double s0,
                            const std::string& label);

}  // namespace invstat
