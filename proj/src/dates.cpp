#include "invstat/dates.hpp"

#include <cstdio>

#include "invstat/errors.hpp"

namespace invstat {

Date parse_date(const std::string& text) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) != 3 ||
        text.size() != 10) {
        throw DataError("malformed date '" + text + "' (expected YYYY-MM-DD)");
    }
    const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                    std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) {
        throw DataError("invalid calendar date '" + text + "'");
    }
    return date;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

bool is_business_day(const Date& d) {
    const std::chrono::weekday wd{std::chrono::sys_days{d}};
    return wd != std::chrono::Saturday && wd != std::chrono::Sunday;
}

std::vector<Date> business_days_from(const Date& origin, std::size_t count) {
    std::vector<Date> out;
    out.reserve(count);
    std::chrono::sys_days day{origin};
    while (out.size() < count) {
        const Date d{day};
        if (is_business_day(d)) out.push_back(d);
        day += std::chrono::days{1};
    }
    return out;
}

}  // namespace invstat
