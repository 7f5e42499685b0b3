#ifndef DQW_EXPERIMENT_HPP
#define DQW_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqw/period.hpp"
#include "dqw/walk.hpp"

namespace dqw {

struct InitialCondition {
    enum class Kind { LocalizedSymmetric, LocalizedSpinor, GaussianPacket };
    Kind kind = Kind::LocalizedSymmetric;
    cdouble spinor_l{1.0, 0.0}, spinor_r{0.0, 0.0}; // LocalizedSpinor
    double packet_kx = 0.0, packet_ky = 0.0, packet_width = 4.0;
};

struct ExperimentConfig {
    WalkKind walk = WalkKind::ThreeStepEquilateral;
    double mass = 0.0;
    int n_x = 1024;
    int n_y = 64;
    int steps = 2000;
    InitialCondition initial;
    std::optional<ElectricField> field;
    bool field_ramp = true;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
};

ExperimentConfig experiment_config_from_json(const std::string& json_text);

SpinorField make_initial_field(const ExperimentConfig& cfg);

// True when a localized packet could wrap on the configured lattice within
// the configured number of steps (conservative bound: one site per substep).
bool wrap_risk(const ExperimentConfig& cfg);

struct EvolveResult {
    std::vector<double> centroid_x, centroid_y, norm;
    std::vector<std::vector<double>> half_columns; // per step, size 2*n_x
    std::optional<BlochReport> bloch;
};

// Runs the evolution with the configured observers; when write_files is set,
// writes density.csv, density.pgm and (with a field) bloch.json under
// cfg.out_dir.
EvolveResult run_evolve(const ExperimentConfig& cfg, bool write_files = true);

// Randomized gauge-invariance check on an n x n lattice: random base coin
// fields and a random per-substep phase change, double simulation over
// `steps` steps; returns the max pointwise deviation. flip_sign corrupts
// the xi transform of the first coin as a negative control.
double gauge_invariance_deviation(std::uint64_t seed, int n, int steps,
                                  bool flip_sign = false);

} // namespace dqw

#endif
