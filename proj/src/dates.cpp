#include "weeklab/dates.hpp"

#include "weeklab/errors.hpp"

#include <array>
#include <cctype>
#include <cstdio>

namespace weeklab {

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return lengths[static_cast<std::size_t>(month - 1)];
}

// Howard Hinnant's civil-days algorithm.
std::int64_t Date::serial() const {
    const int y = year - (month <= 2);
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2u) / 5u +
        static_cast<unsigned>(day) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date date_from_serial(std::int64_t days) {
    std::int64_t z = days + 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m),
                static_cast<int>(d)};
}

int Date::iso_weekday() const {
    // 1970-01-01 was a Thursday.
    std::int64_t w = (serial() + 3) % 7;
    if (w < 0) w += 7;
    return static_cast<int>(w) + 1;
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

Date parse_date(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw ParseError("bad date '" + text + "': expected YYYY-MM-DD");
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad date '" + text + "': expected YYYY-MM-DD");
    Date d;
    d.year = std::stoi(text.substr(0, 4));
    d.month = std::stoi(text.substr(5, 2));
    d.day = std::stoi(text.substr(8, 2));
    if (d.month < 1 || d.month > 12)
        throw ValidationError("bad date '" + text + "': month out of range");
    if (d.day < 1 || d.day > days_in_month(d.year, d.month))
        throw ValidationError("bad date '" + text + "': day out of range");
    return d;
}

Date iso_week_start(const Date& d) {
    return date_from_serial(d.serial() - (d.iso_weekday() - 1));
}

IsoWeek iso_week_of(const Date& d) {
    // The ISO week of a date is the week containing its Thursday.
    const Date thursday = date_from_serial(d.serial() - (d.iso_weekday() - 1) + 3);
    const std::int64_t jan1 = Date{thursday.year, 1, 1}.serial();
    const int doy = static_cast<int>(thursday.serial() - jan1) + 1;
    return IsoWeek{thursday.year, (doy - 1) / 7 + 1};
}

} // namespace weeklab
