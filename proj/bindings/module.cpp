// Python bindings for the invstat core. Containers cross the boundary as
// plain lists/tuples (copies); result structs are bound read-only.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invstat/asymmetry.hpp"
#include "invstat/dates.hpp"
#include "invstat/errors.hpp"
#include "invstat/inverse_stats.hpp"
#include "invstat/leverage.hpp"
#include "invstat/market_data.hpp"
#include "invstat/rng.hpp"
#include "invstat/shuffler.hpp"
#include "invstat/synth.hpp"
#include "invstat/version.hpp"

namespace py = pybind11;

namespace {

invstat::ReturnSeries make_return_series(std::vector<double> r) {
    invstat::ReturnSeries out;
    out.r = std::move(r);
    return out;
}

invstat::LogSeries make_log_series(std::vector<double> s) {
    invstat::LogSeries out;
    out.s = std::move(s);
    return out;
}

double sigma_or_computed(double sigma, const std::vector<double>& log_prices) {
    if (sigma > 0.0) return sigma;
    invstat::LogSeries s = make_log_series(log_prices);
    return invstat::volatility(invstat::daily_returns(s));
}

std::vector<std::string> format_dates(const std::vector<invstat::Date>& dates) {
    std::vector<std::string> out;
    out.reserve(dates.size());
    for (const invstat::Date& d : dates) out.push_back(invstat::format_date(d));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace invstat;

    m.doc() =
        "Inverse statistics of daily price series: first-passage distributions, "
        "window-shuffling asymmetry analysis and leverage correlations.";
    m.attr("__version__") = kVersion;
    m.attr("rng_algorithm") = RngStream::kAlgorithm;

    // Translators run newest-first, so register the base before the leaves.
    py::exception<Error> base_exc(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", base_exc);
    py::register_exception<IoError>(m, "IoError", base_exc);
    py::register_exception<DataError>(m, "DataError", base_exc);
    py::register_exception<FitError>(m, "FitError", base_exc);

    py::class_<PriceSeries>(m, "PriceSeries")
        .def(py::init([](const std::vector<std::string>& dates, std::vector<double> close,
                         const std::string& label) {
                 std::vector<Date> parsed;
                 parsed.reserve(dates.size());
                 for (const std::string& d : dates) parsed.push_back(parse_date(d));
                 return PriceSeries(std::move(parsed), std::move(close), label);
             }),
             py::arg("dates"), py::arg("close"), py::arg("label") = "series")
        .def_property_readonly("dates",
                               [](const PriceSeries& p) { return format_dates(p.dates()); })
        .def_property_readonly("close", [](const PriceSeries& p) { return p.close(); })
        .def_property_readonly("label", [](const PriceSeries& p) { return p.label(); })
        .def("__len__", &PriceSeries::size)
        .def("log", [](const PriceSeries& p) { return to_log(p).s; },
             "Log-price path ln S(t).")
        .def("returns", [](const PriceSeries& p) { return daily_returns(to_log(p)).r; },
             "Daily log-returns r(t) = ln S(t+1) - ln S(t).");

    py::class_<CsvSchema>(m, "CsvSchema")
        .def(py::init<>())
        .def_readwrite("date_col", &CsvSchema::date_col)
        .def_readwrite("close_col", &CsvSchema::close_col);

    m.def("load_csv", &load_csv, py::arg("path"), py::arg("schema") = CsvSchema{},
          "Load a daily close CSV (header required, ISO dates).");

    m.def(
        "gaussian_returns",
        [](std::size_t n, double sigma, std::uint64_t seed) {
            return gen_gaussian_returns(n, sigma, gaussian_stream(seed)).r;
        },
        py::arg("n"), py::arg("sigma") = 0.01, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "i.i.d. normal(0, sigma^2) daily returns.");

    m.def(
        "student_t_returns",
        [](std::size_t n, double nu, double scale, std::uint64_t seed) {
            return gen_student_t_returns(n, nu, scale, student_t_stream(seed)).r;
        },
        py::arg("n"), py::arg("nu") = 3.0, py::arg("scale") = 0.01, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "i.i.d. scaled Student-t returns (requires nu > 2).");

    m.def(
        "drop_rebound_returns",
        [](std::size_t n, double sigma, double drop_magnitude, std::size_t rebound_len,
           double drop_prob, std::uint64_t seed) {
            DropReboundParams params;
            params.sigma = sigma;
            params.drop_magnitude = drop_magnitude;
            params.rebound_len = rebound_len;
            params.drop_prob = drop_prob;
            return gen_drop_rebound_returns(n, params, drop_rebound_stream(seed)).r;
        },
        py::arg("n"), py::arg("sigma") = 0.01, py::arg("drop_magnitude") = 0.05,
        py::arg("rebound_len") = 10, py::arg("drop_prob") = 0.02, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "Gaussian baseline with planted drop/rebound blocks that sum to zero.");

    m.def(
        "volatility",
        [](const std::vector<double>& r) { return compute_volatility(r); }, py::arg("returns"),
        "Sample standard deviation (n-1), permutation-stable summation.");

    m.def(
        "log_index",
        [](const std::vector<double>& r, double s0) {
            return rebuild_index(make_return_series(r), s0).s;
        },
        py::arg("returns"), py::arg("s0") = 0.0,
        "Cumulative log-price path: s(0) = s0, s(t+1) = s(t) + r(t).");

    py::class_<FptDistribution>(m, "FptDistribution")
        .def_readonly("counts", &FptDistribution::counts)
        .def_readonly("total_starts", &FptDistribution::total_starts)
        .def_readonly("censored", &FptDistribution::censored)
        .def_readonly("tau_max", &FptDistribution::tau_max)
        .def_readonly("rho", &FptDistribution::rho)
        .def_readonly("sigma", &FptDistribution::sigma)
        .def_property_readonly("realized", &FptDistribution::realized)
        .def("mode", [](const FptDistribution& d, int smooth_window) {
                 return mode_tau(d, smooth_window);
             },
             py::arg("smooth_window") = 3,
             "Most probable waiting time (argmax after a centered moving sum).");

    m.def(
        "fpt",
        [](const std::vector<double>& log_prices, double k, double sigma, int tau_max) {
            const double sig = sigma_or_computed(sigma, log_prices);
            const LogSeries s = make_log_series(log_prices);
            return fpt_distribution(s, ReturnLevel(k, sig), tau_max);
        },
        py::arg("log_prices"), py::arg("k"), py::arg("sigma") = 0.0, py::arg("tau_max") = 1000,
        py::call_guard<py::gil_scoped_release>(),
        "First-passage histogram for level rho = k*sigma over every start day. "
        "sigma <= 0 means: compute it from the series' daily returns.");

    m.def("brownian_fpt_pdf", &brownian_fpt_pdf, py::arg("rho"), py::arg("diffusion"),
          py::arg("tau"), "Brownian first-passage density.");

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("value", &FitResult::value)
        .def_readonly("std_error", &FitResult::std_error)
        .def_readonly("fit_lo", &FitResult::fit_lo)
        .def_readonly("fit_hi", &FitResult::fit_hi)
        .def_readonly("residual_norm", &FitResult::residual_norm)
        .def_readonly("n_points", &FitResult::n_points);

    m.def("tail_exponent", &tail_exponent, py::arg("dist"), py::arg("fit_lo"), py::arg("fit_hi"),
          "Tail exponent alpha of p(tau) ~ tau^-alpha over log-binned counts.");

    m.def(
        "gamma_scaling",
        [](const std::vector<std::pair<double, double>>& rho_tau_star, double fit_min_abs_rho) {
            return gamma_scaling(rho_tau_star, fit_min_abs_rho);
        },
        py::arg("rho_tau_star"), py::arg("fit_min_abs_rho"),
        "Scaling exponent gamma of tau* ~ |rho|^gamma from (rho, tau*) pairs.");

    py::class_<SignStats>(m, "SignStats")
        .def_readonly("tau_star", &SignStats::tau_star)
        .def_readonly("dispersion", &SignStats::dispersion)
        .def_readonly("censored_frac", &SignStats::censored_frac)
        .def_readonly("histogram", &SignStats::histogram)
        .def_readonly("per_perm_modes", &SignStats::per_perm_modes);

    py::class_<SweepCell>(m, "SweepCell")
        .def_readonly("T", &SweepCell::T)
        .def_readonly("k", &SweepCell::k)
        .def_readonly("rho_abs", &SweepCell::rho_abs)
        .def_readonly("n_p", &SweepCell::n_p)
        .def_readonly("plus", &SweepCell::plus)
        .def_readonly("minus", &SweepCell::minus);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("cells", &SweepResult::cells)
        .def_readonly("sigma", &SweepResult::sigma)
        .def_readonly("n_p", &SweepResult::n_p)
        .def_readonly("tau_max", &SweepResult::tau_max)
        .def_readonly("smooth_window", &SweepResult::smooth_window)
        .def_readonly("master_seed", &SweepResult::master_seed)
        .def_readonly("rng_algorithm", &SweepResult::rng_algorithm)
        .def("cell", &SweepResult::cell, py::arg("T"), py::arg("k"),
             py::return_value_policy::copy);

    m.def(
        "sweep",
        [](const std::vector<double>& returns, std::optional<std::vector<int>> T_list,
           std::optional<std::vector<double>> k_list, int n_p, int tau_max, int smooth_window,
           std::uint64_t seed, int workers, double sigma, bool keep_histograms) {
            SweepParams params;
            if (T_list) params.T_list = std::move(*T_list);
            if (k_list) params.k_list = std::move(*k_list);
            params.n_p = n_p;
            params.tau_max = tau_max;
            params.smooth_window = smooth_window;
            params.master_seed = seed;
            params.workers = workers;
            params.sigma = sigma;
            params.keep_histograms = keep_histograms;
            return sweep(make_return_series(returns), params);
        },
        py::arg("returns"), py::arg("T_list") = std::nullopt, py::arg("k_list") = std::nullopt,
        py::arg("n_p") = 1000, py::arg("tau_max") = 1000, py::arg("smooth_window") = 3,
        py::arg("seed") = 0, py::arg("workers") = 0, py::arg("sigma") = 0.0,
        py::arg("keep_histograms") = true, py::call_guard<py::gil_scoped_release>(),
        "Permutation-averaged first-passage sweep over the (T, k) grid.");

    py::class_<AsymmetryCurve>(m, "AsymmetryCurve")
        .def_readonly("k", &AsymmetryCurve::k)
        .def_readonly("rho_abs", &AsymmetryCurve::rho_abs)
        .def_readonly("sigma", &AsymmetryCurve::sigma)
        .def_readonly("T", &AsymmetryCurve::T)
        .def_readonly("w", &AsymmetryCurve::w)
        .def_readonly("w_plus", &AsymmetryCurve::w_plus)
        .def_readonly("w_minus", &AsymmetryCurve::w_minus)
        .def_readonly("w_plus_defined", &AsymmetryCurve::w_plus_defined)
        .def_readonly("w_minus_defined", &AsymmetryCurve::w_minus_defined)
        .def_readonly("tau_star_inf_plus", &AsymmetryCurve::tau_star_inf_plus)
        .def_readonly("tau_star_inf_minus", &AsymmetryCurve::tau_star_inf_minus)
        .def_readonly("tau_star_1_plus", &AsymmetryCurve::tau_star_1_plus)
        .def_readonly("tau_star_1_minus", &AsymmetryCurve::tau_star_1_minus)
        .def_readonly("tau_star_1", &AsymmetryCurve::tau_star_1)
        .def_readonly("delta_tau_inf", &AsymmetryCurve::delta_tau_inf)
        .def_readonly("T_inf", &AsymmetryCurve::T_inf);

    m.def("asymmetry_curve", &build_asymmetry_curve, py::arg("sweep_result"), py::arg("k"),
          py::arg("T_inf") = 1000,
          "w(T) and w_pm(T,1) for one level magnitude k; needs cells at T=1 and T_inf.");

    py::class_<ThetaFit>(m, "ThetaFit")
        .def_readonly("theta", &ThetaFit::theta)
        .def_readonly("std_error", &ThetaFit::std_error)
        .def_readonly("fit_T_lo", &ThetaFit::fit_T_lo)
        .def_readonly("fit_T_hi", &ThetaFit::fit_T_hi)
        .def_readonly("n_points", &ThetaFit::n_points)
        .def_readonly("n_excluded", &ThetaFit::n_excluded);

    m.def("theta_fit", &theta_fit, py::arg("curve"), py::arg("T_hi") = 30,
          "Exponential fit |1 - w(T)| ~ exp(-T/theta) over T < T_hi.");

    py::class_<LeverageCurve>(m, "LeverageCurve")
        .def_readonly("dt", &LeverageCurve::dt)
        .def_readonly("taus", &LeverageCurve::taus)
        .def_readonly("values", &LeverageCurve::values)
        .def_readonly("std_errors", &LeverageCurve::std_errors)
        .def_readonly("n_terms", &LeverageCurve::n_terms)
        .def_readonly("reliable", &LeverageCurve::reliable);

    m.def(
        "leverage",
        [](const std::vector<double>& returns, int tau_lo, int tau_hi) {
            return leverage(make_return_series(returns), tau_lo, tau_hi);
        },
        py::arg("returns"), py::arg("tau_lo") = -25, py::arg("tau_hi") = 50,
        py::call_guard<py::gil_scoped_release>(),
        "Leverage correlation L(tau) = <r^2(t+tau) r(t)> / <r^2>^2.");
}
