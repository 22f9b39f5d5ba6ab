#pragma once

#include "weeklab/dates.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weeklab {

/// One daily OHLCV observation. Invariants are enforced at parse time:
/// low <= min(open, close) <= max(open, close) <= high, volume >= 0.
struct DailyBar {
    Date date;
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double adj_close = 0.0;
    std::int64_t volume = 0;
};

struct DailySeries {
    std::vector<DailyBar> bars; // strictly ascending by date
};

/// One ISO calendar week aggregated from daily bars: first open, max high,
/// min low, last close, summed volume.
struct WeeklyBar {
    Date week_start; // Monday of the ISO week
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    std::int64_t volume = 0;
};

struct WeeklySeries {
    std::vector<WeeklyBar> bars;
};

/// Parses a Yahoo-format OHLCV export. The header must be exactly
/// `Date,Open,High,Low,Close,Adj Close,Volume`. Bars come back sorted
/// ascending by date. Throws ParseError (with the offending line number)
/// or ValidationError.
DailySeries parse_ohlcv_csv(const std::string& text);

/// Groups daily bars by ISO calendar week. Partial (holiday) weeks still
/// form one bar. Throws InsufficientDataError on empty input.
WeeklySeries resample_weekly(const DailySeries& daily);

/// r_t = close_t / close_{t-1} - 1; result has one element fewer than the
/// series has bars. Requires at least 2 bars.
std::vector<double> weekly_returns(const WeeklySeries& series);

/// close_t / close_0 for every bar; first element is exactly 1.
std::vector<double> relative_series(const WeeklySeries& series);

/// Downloads a CSV document over HTTP and parses it. `endpoint` is a URL
/// template; `{symbol}`, `{start}` and `{end}` placeholders are substituted
/// when present. Transport problems throw FetchError; body problems throw
/// the same errors as parse_ohlcv_csv.
DailySeries fetch_remote(const std::string& symbol, const Date& start,
                         const Date& end, const std::string& endpoint);

} // namespace weeklab
