#include "invstat/synth.hpp"

#include <cmath>

#include "invstat/errors.hpp"

namespace invstat {

namespace {

void check_n(std::size_t n) {
    if (n < 2) throw DataError("synth: need n >= 2 days, got " + std::to_string(n));
}

}  // namespace

RngStream gaussian_stream(std::uint64_t master_seed) {
    return RngStream(master_seed, {static_cast<std::uint64_t>(StreamPurpose::gaussian)});
}

RngStream student_t_stream(std::uint64_t master_seed) {
    return RngStream(master_seed, {static_cast<std::uint64_t>(StreamPurpose::student_t)});
}

RngStream drop_rebound_stream(std::uint64_t master_seed) {
    return RngStream(master_seed, {static_cast<std::uint64_t>(StreamPurpose::drop_rebound)});
}

ReturnSeries gen_gaussian_returns(std::size_t n, double sigma, RngStream stream) {
    check_n(n);
    if (!(sigma > 0.0)) throw DataError("gen_gaussian_returns: sigma must be > 0");
    ReturnSeries out;
    out.r.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.r[i] = sigma * stream.next_normal();
    out.sigma_cache = compute_volatility(out.r);
    return out;
}

ReturnSeries gen_student_t_returns(std::size_t n, double nu, double scale, RngStream stream) {
    check_n(n);
    if (!(nu > 2.0)) {
        throw DataError("gen_student_t_returns: nu must be > 2 (finite variance), got " +
                        std::to_string(nu));
    }
    if (!(scale > 0.0)) throw DataError("gen_student_t_returns: scale must be > 0");
    ReturnSeries out;
    out.r.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = stream.next_normal();
        const double chi2 = 2.0 * stream.next_gamma(nu / 2.0);  // chi^2_nu
        out.r[i] = scale * z / std::sqrt(chi2 / nu);
    }
    out.sigma_cache = compute_volatility(out.r);
    return out;
}

ReturnSeries gen_drop_rebound_returns(std::size_t n, const DropReboundParams& params,
                                      RngStream stream) {
    check_n(n);
    if (params.rebound_len < 1) throw DataError("drop_rebound: rebound_len must be >= 1");
    if (!(params.drop_prob >= 0.0) || !(params.drop_prob < 1.0)) {
        throw DataError("drop_rebound: drop_prob must be in [0, 1)");
    }
    if (!(params.sigma > 0.0)) throw DataError("drop_rebound: sigma must be > 0");
    if (!(params.drop_magnitude > 0.0)) throw DataError("drop_rebound: drop_magnitude must be > 0");

    ReturnSeries out;
    out.r.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.r[i] = params.sigma * stream.next_normal();

    const double rebound_step = params.drop_magnitude / static_cast<double>(params.rebound_len);
    std::size_t i = 0;
    while (i < n) {
        // Only inject where the full drop+rebound block fits; blocks never overlap.
        if (i + params.rebound_len < n && stream.next_unit() < params.drop_prob) {
            out.r[i] = -params.drop_magnitude;
            for (std::size_t j = 1; j <= params.rebound_len; ++j) out.r[i + j] = rebound_step;
            i += params.rebound_len + 1;
        } else {
            ++i;
        }
    }
    out.sigma_cache = compute_volatility(out.r);
    return out;
}

PriceSeries to_price_series(const ReturnSeries& r, const Date& origin, double s0,
                            const std::string& label) {
    if (!(s0 > 0.0)) throw DataError("to_price_series: start price must be > 0");
    const LogSeries logs = rebuild_index(r, std::log(s0));
    std::vector<double> close;
    close.reserve(logs.size());
    for (double s : logs.s) close.push_back(std::exp(s));
    return PriceSeries(business_days_from(origin, logs.size()), std::move(close), label);
}

}  // namespace invstat
