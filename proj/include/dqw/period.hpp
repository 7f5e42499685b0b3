#ifndef DQW_PERIOD_HPP
#define DQW_PERIOD_HPP

#include <vector>

namespace dqw {

struct PeriodEstimate {
    bool detected = false;
    double period = 0.0;      // samples
    double peak_autocorr = 0.0;
};

// Autocorrelation period estimator. Candidate lags are interior local maxima
// of the normalized autocorrelation of the mean-removed series over
// [4, N/2] with r >= 0.5 and lag <= N/3 (three full periods must fit); the
// low harmonics inside the window must also correlate, and the smallest
// qualifying lag is refined by parabolic interpolation. Throws if the series
// is too short to say anything.
PeriodEstimate estimate_period(const std::vector<double>& series,
                               double threshold = 0.5);

struct BlochReport {
    bool detected = false;
    double period_steps = 0.0;
    double prediction = 0.0;            // L_bz / E along the field axis
    double prediction_two_thirds = 0.0; // (2/3) * prediction
    double prediction_three_halves = 0.0;
    double relative_error = 0.0;        // to the nearest prediction
    double peak_autocorr = 0.0;
};

// Periods predicted from the Brillouin-zone length along the field axis
// (2*pi for x, 2*pi/sqrt3 for y, 2*pi/|E| for mixed fields).
BlochReport make_bloch_report(const std::vector<double>& centroid_series,
                              double ex, double ey);

} // namespace dqw

#endif
