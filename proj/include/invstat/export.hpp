#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "invstat/asymmetry.hpp"
#include "invstat/inverse_stats.hpp"
#include "invstat/leverage.hpp"
#include "invstat/shuffler.hpp"

namespace invstat {

// Fixed "%.12g" formatting so identical values always serialize to identical
// bytes (run-to-run and worker-count reproducibility is tested on the files).
std::string fmt_double(double v);

// tau,count,probability over [1, last populated tau].
std::string fpt_distribution_csv(const FptDistribution& d);
nlohmann::json fpt_distribution_json(const FptDistribution& d, int smooth_window);

// T,k,sign,tau_star,dispersion,n_p,censored_frac (one row per sign).
std::string sweep_csv(const SweepResult& s);
nlohmann::json sweep_json(const SweepResult& s);

// T,w,w_plus,w_minus for one level.
std::string asymmetry_curve_csv(const AsymmetryCurve& c);
// k,rho,theta,theta_std_error,fit_T_lo,fit_T_hi,n_points,n_excluded.
std::string theta_table_csv(const std::vector<AsymmetryCurve>& curves,
                            const std::vector<ThetaFit>& fits);
nlohmann::json era_comparison_json(const EraComparison& e);

// tau,L,stderr,n_terms.
std::string leverage_csv(const LeverageCurve& c);

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::string file_checksum_hex(const std::string& path);  // fnv1a64 of the raw bytes

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace invstat
