#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invstat/dates.hpp"

namespace invstat {

// Daily closing values of an index or stock. Immutable after construction;
// the constructor enforces: dates strictly increasing, all closes > 0,
// equal lengths, at least 2 rows.
class PriceSeries {
public:
    PriceSeries(std::vector<Date> dates, std::vector<double> close, std::string label);

    const std::vector<Date>& dates() const noexcept { return dates_; }
    const std::vector<double>& close() const noexcept { return close_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return close_.size(); }

private:
    std::vector<Date> dates_;
    std::vector<double> close_;
    std::string label_;
};

// Log-price path s(t) = ln S(t).
struct LogSeries {
    std::vector<double> s;
    std::optional<Date> origin;  // date of s(0), when known

    std::size_t size() const noexcept { return s.size(); }
};

// Daily log-returns r(t) = s(t+1) - s(t).
struct ReturnSeries {
    std::vector<double> r;
    std::optional<double> sigma_cache;  // sample std, filled by producers that know it

    std::size_t size() const noexcept { return r.size(); }
};

struct CsvSchema {
    std::string date_col = "date";
    std::string close_col = "close";
};

// Reads a daily close CSV (header row required, ISO-8601 dates, rows in any
// order). Rows are sorted ascending; duplicate dates and non-positive prices
// are rejected.
PriceSeries load_csv(const std::string& path, const CsvSchema& schema = {});

// Same parser over in-memory text; `source_name` is used in error messages.
PriceSeries parse_csv(const std::string& text, const CsvSchema& schema,
                      const std::string& source_name);

void write_price_csv(const PriceSeries& p, const std::string& path);

LogSeries to_log(const PriceSeries& p);

// s(t+dt) - s(t); dt = 0 gives 0.
double log_return(const LogSeries& s, std::size_t t, std::size_t dt);

ReturnSeries daily_returns(const LogSeries& s);

// Sample standard deviation (n-1 divisor). Uses the cached value when
// present; computes permutation-stable otherwise.
double volatility(const ReturnSeries& r);

// Always recomputes. Accumulation runs over the sorted values, so any
// permutation of the input yields a bit-identical result.
double compute_volatility(std::span<const double> r);

// s(0) = s0, s(t+1) = s(t) + r(t).
LogSeries rebuild_index(const ReturnSeries& r, double s0);

// First part strictly before `boundary`, second at/after. Each part must
// still be a valid PriceSeries (>= 2 rows).
std::pair<PriceSeries, PriceSeries> split_era(const PriceSeries& p, const Date& boundary);

}  // namespace invstat
