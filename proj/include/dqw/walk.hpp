#ifndef DQW_WALK_HPP
#define DQW_WALK_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "dqw/gauge.hpp"
#include "dqw/lattice.hpp"
#include "dqw/mat2.hpp"

namespace dqw {

enum class WalkKind {
    SixStepEquilateral,
    ThreeStepEquilateral,
    ThreeStepIsosceles,
    ThreeStepHoneycomb
};

LatticeFamily lattice_family(WalkKind kind);
const char* walk_name(WalkKind kind);

// psiL gathers from neighbor left_dir, psiR from right_dir.
struct ShiftRule {
    int left_dir = 1;
    int right_dir = 4;
};

struct SubStep {
    std::optional<CoinAngles> pre_rotation;
    ShiftRule shift;
    std::optional<CoinAngles> post_rotation;
    int coin_slot = -1; // gauge coin slot, applied between shift and post-rotation
};

struct WalkSpec {
    WalkKind kind = WalkKind::ThreeStepEquilateral;
    std::vector<SubStep> substeps;
    double mass = 0.0;
    double epsilon = 1.0;
    double dt = 1.0;
    std::optional<CoinAngles> mass_coin; // applied after the last substep
    std::array<Mat2, 3> continuum_gammas{};

    LatticeFamily family() const { return lattice_family(kind); }
};

WalkSpec build_walk(WalkKind kind, double mass, double epsilon);

// One full step Psi(t+dt) = W Psi(t). A gauge config is only legal for the
// three-step equilateral walk; its coin for substep i is evaluated at
// t + (i-1)*dt/3.
SpinorField step(const WalkSpec& walk, const SpinorField& field, double t,
                 const FieldConfig* gauge = nullptr);

// Inverse of a free step (adjoint substeps in reverse order).
SpinorField step_adjoint(const WalkSpec& walk, const SpinorField& field);

using StepObserver = std::function<void(int step_index, double t, const SpinorField&)>;

// Applies `steps` steps, invoking every observer at step 0 (initial state)
// and after each step.
void evolve(const WalkSpec& walk, SpinorField& field, int steps,
            const FieldConfig* gauge, const std::vector<StepObserver>& observers);

} // namespace dqw

#endif
