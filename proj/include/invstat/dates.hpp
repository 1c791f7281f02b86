#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace invstat {

using Date = std::chrono::year_month_day;

// Parses strict ISO-8601 "YYYY-MM-DD". Throws DataError on malformed or
// non-existent calendar dates.
Date parse_date(const std::string& text);

std::string format_date(const Date& d);

// Monday..Friday.
bool is_business_day(const Date& d);

// `count` consecutive business days starting at `origin` (moved forward to the
// next business day if it falls on a weekend).
std::vector<Date> business_days_from(const Date& origin, std::size_t count);

}  // namespace invstat
