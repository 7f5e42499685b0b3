#ifndef DQW_DISPERSION_HPP
#define DQW_DISPERSION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dqw/mat2.hpp"
#include "dqw/walk.hpp"

namespace dqw {

struct WaveVector {
    double kx = 0.0;
    double ky = 0.0;
};

inline constexpr double bz_half_width = 3.14159265358979323846;
double bz_half_height(); // pi/sqrt(3)

// Canonical representative in (-pi, pi] x (-pi/sqrt3, pi/sqrt3].
WaveVector canonical(WaveVector k);

// Offset used in the k.X phase of direction `dir`. Matches the physical
// neighbor offset except for the isosceles walk, whose zone is charted in
// the equilateral dual basis (ky scaled by sqrt. 3).
Vec2d momentum_offset(WalkKind kind, int dir);

// Physical wave-vector -> zone chart (identity except isosceles).
WaveVector chart_from_physical(WalkKind kind, WaveVector k_physical);

// Momentum-space one-step operator: every shift becomes
// diag(e^{-i k.v_L}, e^{-i k.v_R}); substeps multiplied in application
// order, mass coin included. Eigenvalues are e^{+-i omega(k)}.
Mat2 walk_matrix(const WalkSpec& walk, WaveVector k);

// (omega_plus, omega_minus), omega_plus in [0, pi].
std::pair<double, double> dispersion_at(const WalkSpec& walk, WaveVector k);

// Both eigenphases extracted through the quadratic characteristic equation
// (no conjugate-pair assumption); used as the independent route in tests.
std::pair<double, double> eigenphases_direct(const WalkSpec& walk, WaveVector k);

// Unit eigenvector of walk_matrix for the e^{+i omega} (branch=+1) or
// e^{-i omega} (branch=-1) eigenvalue.
Vec2c polarization(const WalkSpec& walk, WaveVector k, int branch);

struct DispersionResult {
    int nx = 0, ny = 0;
    std::vector<WaveVector> k;      // row-major, kx slowest
    std::vector<double> omega_plus; // omega_minus = -omega_plus
};

DispersionResult scan_bz(const WalkSpec& walk, int nx, int ny);

struct DegenerateLine {
    char fixed_axis = 'x'; // 'x': kx fixed (ky free), 'y': ky fixed
    double fixed_value = 0.0;
};

struct GapReport {
    double omega_min = 0.0;
    double gap = 0.0; // 2*omega_min
    std::vector<WaveVector> minimizers; // includes +-zone-boundary copies
    std::vector<DegenerateLine> degenerate_lines;
};

// Coarse grid scan (grid_n^2, default 512) plus derivative-free descent from
// every grid local minimum; minimizers clustered within 1e-4; flat zone-edge
// lines (variation < 1e-9) reported as degenerate lines.
GapReport min_gap(const WalkSpec& walk, int grid_n = 512);

struct ConeReport {
    std::vector<double> slopes; // omega/|k| per sampled physical direction
    double mean_slope = 0.0;
    double max_anisotropy = 0.0; // max |s_i - mean| / mean
};

// Samples omega on a physical-coordinate ring of the given radius around
// k = 0; the massless continuum limit forces the slopes to be isotropic.
ConeReport cone_slope_check(const WalkSpec& walk, double radius, int directions);

} // namespace dqw

#endif
