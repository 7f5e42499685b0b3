#ifndef DQW_GAUGE_HPP
#define DQW_GAUGE_HPP

#include <array>
#include <functional>
#include <string>

#include "dqw/lattice.hpp"

namespace dqw {

// Scalar field over (time, site). Times are walk time units; during a step
// starting at t the coin of substep i is evaluated at t + (i-1)*dt/3.
using AngleField = std::function<double(double t, SiteIndex site)>;

// Local phase change, evaluable at every substep time t + r*dt/3.
struct PhaseChange {
    std::function<double(double t, SiteIndex site)> delta_phi;
    double operator()(double t, SiteIndex s) const { return delta_phi(t, s); }
};

// Per-substep coin angle fields for the three-step equilateral walk.
// theta is fixed at 0, so the zeta fields never influence the evolution;
// they are carried for completeness and serialization.
struct FieldConfig {
    std::array<AngleField, 3> alpha{};
    std::array<AngleField, 3> xi{};
    std::array<AngleField, 3> zeta{};
    bool spatially_uniform = false; // coins independent of the site
    std::string descriptor;         // JSON descriptor when serializable

    CoinAngles coin(int slot, double t, SiteIndex site) const;
    bool empty_slot(int slot) const { return !alpha[slot] && !xi[slot]; }
};

FieldConfig free_field_config();

// Exact gauge transformation: for each substep i with shift pair (d, d+3),
//   alpha'_i(t,X) = alpha_i(t,X) + dphi(t + dt/3, X) - sigma_i(t,X)
//   xi'_i(t,X)    = xi_i(t,X) - delta_i(t,X)
// where sigma_i/delta_i are the half sum/difference of dphi at the two
// source neighbors at the substep's input time. zeta is unchanged.
FieldConfig gauge_transform(const FieldConfig& config, const PhaseChange& phase,
                            const LatticeSpec& lattice, double dt);

// Deltas (as a FieldConfig over a zero base) for phase changes constant
// across the sub-steps of each step; `phase_at_steps` is sampled at integer
// step times only.
FieldConfig simplified_transform_constant_substeps(
    const std::function<double(double t, SiteIndex)>& phase_at_steps,
    const LatticeSpec& lattice, double dt);

// Same for phase changes that interpolate linearly between step endpoints.
FieldConfig simplified_transform_linear_interpolation(
    const std::function<double(double t, SiteIndex)>& phase_at_steps,
    const LatticeSpec& lattice, double dt);

// Continuum electromagnetic potential of a config whose angles scale
// linearly with epsilon; fields are evaluated pointwise.
struct PotentialTriple {
    AngleField A0, A1, A2;
};

PotentialTriple continuum_potential(const FieldConfig& config, double epsilon);

struct ElectricField {
    double Ex = 0.0;
    double Ey = 0.0;
};

// Uniform constant electric field. With ramp=true (default) the coin of
// substep i carries xi_i(t) = (E . e_i) * t/dt, a vector potential growing
// linearly in walk steps; ramp=false keeps the static coin angles
// xi_1 = 0, xi_2 = (-3Ex + sqrt3 Ey)/2, xi_3 = (3Ex + sqrt3 Ey)/2.
FieldConfig uniform_electric_config(ElectricField e, double dt, bool ramp = true);

// Serialization (JSON text). Only uniform-electric and tabulated configs
// round-trip; closure-backed configs must be tabulated first.
std::string to_json(const FieldConfig& config);
FieldConfig field_config_from_json(const std::string& json_text);

// Sample a config onto the substep-time grid of `steps` steps so it can be
// serialized.
FieldConfig tabulate(const FieldConfig& config, const LatticeSpec& lattice,
                     double dt, int steps);

} // namespace dqw

#endif
