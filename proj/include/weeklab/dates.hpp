#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace weeklab {

/// Proleptic Gregorian calendar date. Plain value type; no time zone.
struct Date {
    int year = 1970;
    int month = 1; // 1..12
    int day = 1;   // 1..31

    auto operator<=>(const Date&) const = default;

    /// Days since 1970-01-01 (negative before the epoch).
    std::int64_t serial() const;

    /// ISO-8601 weekday, Monday = 1 .. Sunday = 7.
    int iso_weekday() const;

    /// "YYYY-MM-DD".
    std::string to_string() const;
};

/// Identifies one ISO-8601 calendar week (Monday-based).
struct IsoWeek {
    int year = 1970; // ISO week-based year, may differ from the civil year
    int week = 1;    // 1..53

    auto operator<=>(const IsoWeek&) const = default;
};

/// Parses strict "YYYY-MM-DD". Throws ParseError on malformed text and
/// ValidationError on impossible dates (month 13, Feb 30).
Date parse_date(const std::string& text);

Date date_from_serial(std::int64_t days);

/// ISO week containing the date (the week of its Thursday).
IsoWeek iso_week_of(const Date& d);

/// Monday of the ISO week containing the date.
Date iso_week_start(const Date& d);

bool is_leap_year(int year);
int days_in_month(int year, int month);

} // namespace weeklab
