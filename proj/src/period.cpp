#include "dqw/period.hpp"

#include <cmath>
#include <stdexcept>

namespace dqw {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt3 = 1.7320508075688772935;
} // namespace

PeriodEstimate estimate_period(const std::vector<double>& series, double threshold) {
    const int n = static_cast<int>(series.size());
    if (n < 16) throw std::invalid_argument("series too short for period estimation");

    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : series) var += (v - mean) * (v - mean);
    var /= n;

    PeriodEstimate est;
    if (var <= 0.0) return est; // constant series

    const int max_lag = n / 2;
    std::vector<double> r(max_lag + 1, 0.0);
    for (int lag = 1; lag <= max_lag; lag++) {
        double acc = 0.0;
        for (int t = 0; t + lag < n; t++)
            acc += (series[t] - mean) * (series[t + lag] - mean);
        r[lag] = acc / ((n - lag) * var);
    }

    double best_r = -2.0;
    for (int lag = 5; lag < max_lag; lag++)
        if (r[lag] > r[lag - 1] && r[lag] >= r[lag + 1])
            best_r = std::max(best_r, r[lag]);
    est.peak_autocorr = best_r;

    for (int lag = 5; lag < max_lag; lag++) {
        if (!(r[lag] > r[lag - 1] && r[lag] >= r[lag + 1])) continue;
        if (r[lag] < threshold) continue;
        if (3 * lag > n) continue; // at least three periods must fit
        // the low harmonics inside the window must correlate too
        bool harmonics_ok = true;
        for (int m = 2; m <= 4 && m * lag <= max_lag; m++) {
            double rm = -2.0;
            for (int d = -m; d <= m; d++) {
                int idx = m * lag + d;
                if (idx >= 4 && idx <= max_lag) rm = std::max(rm, r[idx]);
            }
            if (rm < threshold) {
                harmonics_ok = false;
                break;
            }
        }
        if (!harmonics_ok) continue;
        double period = lag;
        if (lag + 1 <= max_lag) {
            double y0 = r[lag - 1], y1 = r[lag], y2 = r[lag + 1];
            double denom = y0 - 2.0 * y1 + y2;
            if (std::abs(denom) > 1e-30) period += 0.5 * (y0 - y2) / denom;
        }
        est.detected = true;
        est.period = period;
        est.peak_autocorr = r[lag];
        return est;
    }
    return est;
}

BlochReport make_bloch_report(const std::vector<double>& centroid_series,
                              double ex, double ey) {
    BlochReport rep;
    const bool measurable = centroid_series.size() >= 16;
    double base;
    if (ex != 0.0 && ey == 0.0)
        base = 2.0 * kPi / std::abs(ex);
    else if (ey != 0.0 && ex == 0.0)
        base = 2.0 * kPi / kSqrt3 / std::abs(ey);
    else if (ex != 0.0 || ey != 0.0)
        base = 2.0 * kPi / std::hypot(ex, ey);
    else
        base = 0.0;
    rep.prediction = base;
    rep.prediction_two_thirds = 2.0 / 3.0 * base;
    rep.prediction_three_halves = 1.5 * base;

    PeriodEstimate est;
    if (measurable) est = estimate_period(centroid_series);
    rep.detected = est.detected;
    rep.peak_autocorr = est.peak_autocorr;
    if (est.detected) {
        rep.period_steps = est.period;
        if (base > 0.0) {
            double err = 1e300;
            for (double p : {rep.prediction, rep.prediction_two_thirds,
                             rep.prediction_three_halves})
                err = std::min(err, std::abs(est.period - p) / p);
            rep.relative_error = err;
        }
    }
    return rep;
}

} // namespace dqw
