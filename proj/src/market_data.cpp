#include "invstat/market_data.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "invstat/errors.hpp"

namespace invstat {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

// Sum over sorted values: any permutation of the input produces the exact
// same rounding sequence, so derived statistics are permutation-invariant.
double sorted_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
}

}  // namespace

PriceSeries::PriceSeries(std::vector<Date> dates, std::vector<double> close, std::string label)
    : dates_(std::move(dates)), close_(std::move(close)), label_(std::move(label)) {
    if (dates_.size() != close_.size()) {
        throw DataError("price series '" + label_ + "': dates and closes differ in length");
    }
    if (close_.size() < 2) {
        throw DataError("price series '" + label_ + "': need at least 2 rows, got " +
                        std::to_string(close_.size()));
    }
    for (std::size_t i = 0; i < close_.size(); ++i) {
        if (!(close_[i] > 0.0) || !std::isfinite(close_[i])) {
            throw DataError("price series '" + label_ + "': non-positive close at row " +
                            std::to_string(i) + " (" + format_date(dates_[i]) + ")");
        }
        if (i > 0 && !(dates_[i - 1] < dates_[i])) {
            throw DataError("price series '" + label_ + "': duplicate or unordered date " +
                            format_date(dates_[i]));
        }
    }
}

PriceSeries parse_csv(const std::string& text, const CsvSchema& schema,
                      const std::string& source_name) {
    std::stringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(source_name + ": empty file (header row required)");
    }
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

    const auto header = split_csv_line(line);
    auto find_col = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        throw DataError(source_name + ": column '" + name + "' not found in header");
    };
    const std::size_t date_idx = find_col(schema.date_col);
    const std::size_t close_idx = find_col(schema.close_col);

    struct Row {
        Date date;
        double close;
    };
    std::vector<Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() <= std::max(date_idx, close_idx)) {
            throw DataError(source_name + ":" + std::to_string(line_no) +
                            ": too few columns");
        }
        Date date;
        try {
            date = parse_date(fields[date_idx]);
        } catch (const DataError& e) {
            throw DataError(source_name + ":" + std::to_string(line_no) + ": " + e.what());
        }
        const std::string& close_text = fields[close_idx];
        char* end = nullptr;
        const double close = std::strtod(close_text.c_str(), &end);
        if (close_text.empty() || end != close_text.c_str() + close_text.size() ||
            !std::isfinite(close)) {
            throw DataError(source_name + ":" + std::to_string(line_no) +
                            ": malformed close value '" + close_text + "'");
        }
        if (close <= 0.0) {
            throw DataError(source_name + ":" + std::to_string(line_no) +
                            ": non-positive close " + close_text);
        }
        rows.push_back({date, close});
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].date == rows[i - 1].date) {
            throw DataError(source_name + ": duplicate date " + format_date(rows[i].date));
        }
    }

    std::vector<Date> dates;
    std::vector<double> close;
    dates.reserve(rows.size());
    close.reserve(rows.size());
    for (const auto& r : rows) {
        dates.push_back(r.date);
        close.push_back(r.close);
    }
    return PriceSeries(std::move(dates), std::move(close), source_name);
}

PriceSeries load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), schema, path);
}

void write_price_csv(const PriceSeries& p, const std::string& path) {
    std::ostringstream out;
    out << "date,close\n";
    char buf[64];
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.12g", p.close()[i]);
        out << format_date(p.dates()[i]) << ',' << buf << '\n';
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << out.str();
}

LogSeries to_log(const PriceSeries& p) {
    LogSeries out;
    out.s.reserve(p.size());
    for (double c : p.close()) out.s.push_back(std::log(c));
    out.origin = p.dates().front();
    return out;
}

double log_return(const LogSeries& s, std::size_t t, std::size_t dt) {
    if (t >= s.size() || t + dt >= s.size()) {
        throw std::out_of_range("log_return: index " + std::to_string(t) + "+" +
                                std::to_string(dt) + " out of range for length " +
                                std::to_string(s.size()));
    }
    return s.s[t + dt] - s.s[t];
}

ReturnSeries daily_returns(const LogSeries& s) {
    if (s.size() < 2) {
        throw DataError("daily_returns: need at least 2 log-prices");
    }
    ReturnSeries out;
    out.r.resize(s.size() - 1);
    for (std::size_t t = 0; t + 1 < s.size(); ++t) out.r[t] = s.s[t + 1] - s.s[t];
    // A single return is a valid series; volatility just stays uncached.
    if (out.r.size() >= 2) out.sigma_cache = compute_volatility(out.r);
    return out;
}

double compute_volatility(std::span<const double> r) {
    if (r.size() < 2) {
        throw DataError("volatility: need at least 2 returns");
    }
    std::vector<double> vals(r.begin(), r.end());
    const double mean = sorted_sum(vals) / static_cast<double>(vals.size());
    std::vector<double> sq;
    sq.reserve(vals.size());
    for (double v : vals) {
        const double d = v - mean;
        sq.push_back(d * d);
    }
    const double ss = sorted_sum(std::move(sq));
    return std::sqrt(ss / static_cast<double>(vals.size() - 1));
}

double volatility(const ReturnSeries& r) {
    if (r.sigma_cache) return *r.sigma_cache;
    return compute_volatility(r.r);
}

LogSeries rebuild_index(const ReturnSeries& r, double s0) {
    LogSeries out;
    out.s.resize(r.size() + 1);
    out.s[0] = s0;
    for (std::size_t t = 0; t < r.size(); ++t) out.s[t + 1] = out.s[t] + r.r[t];
    return out;
}

std::pair<PriceSeries, PriceSeries> split_era(const PriceSeries& p, const Date& boundary) {
    if (boundary <= p.dates().front() || p.dates().back() < boundary) {
        throw DataError("split_era: boundary " + format_date(boundary) +
                        " outside series range " + format_date(p.dates().front()) + ".." +
                        format_date(p.dates().back()));
    }
    const auto it = std::lower_bound(p.dates().begin(), p.dates().end(), boundary);
    const std::size_t cut = static_cast<std::size_t>(it - p.dates().begin());
    if (cut < 2 || p.size() - cut < 2) {
        throw DataError("split_era: a part would have fewer than 2 rows");
    }
    PriceSeries first(std::vector<Date>(p.dates().begin(), p.dates().begin() + cut),
                      std::vector<double>(p.close().begin(), p.close().begin() + cut),
                      p.label() + " (pre)");
    PriceSeries second(std::vector<Date>(p.dates().begin() + cut, p.dates().end()),
                       std::vector<double>(p.close().begin() + cut, p.close().end()),
                       p.label() + " (post)");
    return {std::move(first), std::move(second)};
}

}  // namespace invstat
