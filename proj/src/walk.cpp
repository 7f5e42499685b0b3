#include "dqw/walk.hpp"

#include <cmath>
#include <stdexcept>

namespace dqw {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt3 = 1.7320508075688772935;

const Mat2 kSigma1{cdouble(0, 0), cdouble(1, 0), cdouble(1, 0), cdouble(0, 0)};
const Mat2 kMinusISigma2{cdouble(0, 0), cdouble(-1, 0), cdouble(1, 0), cdouble(0, 0)};
const Mat2 kPlusISigma2{cdouble(0, 0), cdouble(1, 0), cdouble(-1, 0), cdouble(0, 0)};
const Mat2 kMinusISigma3{cdouble(0, -1), cdouble(0, 0), cdouble(0, 0), cdouble(0, 1)};
const Mat2 kPlusISigma3{cdouble(0, 1), cdouble(0, 0), cdouble(0, 0), cdouble(0, -1)};
} // namespace

LatticeFamily lattice_family(WalkKind kind) {
    switch (kind) {
    case WalkKind::SixStepEquilateral:
    case WalkKind::ThreeStepEquilateral:
        return LatticeFamily::EquilateralTriangle;
    case WalkKind::ThreeStepIsosceles:
        return LatticeFamily::IsoscelesTriangle;
    case WalkKind::ThreeStepHoneycomb:
        return LatticeFamily::Honeycomb;
    }
    throw std::invalid_argument("unknown walk kind");
}

const char* walk_name(WalkKind kind) {
    switch (kind) {
    case WalkKind::SixStepEquilateral: return "six-step-equilateral";
    case WalkKind::ThreeStepEquilateral: return "three-step-equilateral";
    case WalkKind::ThreeStepIsosceles: return "three-step-isosceles";
    case WalkKind::ThreeStepHoneycomb: return "three-step-honeycomb";
    }
    return "?";
}

WalkSpec build_walk(WalkKind kind, double mass, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    WalkSpec w;
    w.kind = kind;
    w.mass = mass;
    w.epsilon = epsilon;
    switch (kind) {
    case WalkKind::SixStepEquilateral: {
        w.dt = 1.5 * epsilon;
        for (int j = 1; j <= 6; j++) {
            double th = kPi / 12.0 + (j - 1) * kPi / 6.0;
            SubStep s;
            s.pre_rotation = CoinAngles{0, kPi / 2, 0, th};
            s.shift = {j, j == 6 ? 1 : j + 1};
            s.post_rotation = CoinAngles{0, -kPi / 2, 0, -th};
            w.substeps.push_back(s);
        }
        w.mass_coin = CoinAngles{0, 0, -kPi / 2, -mass * w.dt};
        w.continuum_gammas = {kSigma1, kMinusISigma3, kMinusISigma2};
        break;
    }
    case WalkKind::ThreeStepEquilateral: {
        w.dt = 1.5 * epsilon;
        for (int j = 1; j <= 3; j++) {
            SubStep s;
            s.shift = {j, j + 3};
            s.coin_slot = j - 1;
            if (j > 1) {
                double th = (j - 1) * kPi / 6.0;
                s.pre_rotation = CoinAngles{0, kPi / 2, 0, th};
                s.post_rotation = CoinAngles{0, -kPi / 2, 0, -th};
            }
            w.substeps.push_back(s);
        }
        w.mass_coin = CoinAngles{0, 0, -kPi / 2, -mass * w.dt};
        w.continuum_gammas = {kSigma1, kPlusISigma2, kMinusISigma3};
        break;
    }
    case WalkKind::ThreeStepIsosceles: {
        w.dt = epsilon;
        for (int j = 1; j <= 3; j++) {
            SubStep s;
            s.shift = {j, j + 3};
            double th = (j - 2) * kPi / 4.0;
            if (j == 1) th = -kPi / 4.0 + mass * epsilon; // U_m replaces U_1
            s.post_rotation = CoinAngles{0, 0, -kPi / 2, th};
            w.substeps.push_back(s);
        }
        w.continuum_gammas = {kSigma1, kPlusISigma2, kPlusISigma3};
        break;
    }
    case WalkKind::ThreeStepHoneycomb: {
        w.dt = 0.75 * kSqrt3 * epsilon;
        for (int j = 1; j <= 3; j++) {
            double th = kPi / 6.0 + (j - 1) * kPi / 3.0;
            SubStep s;
            s.pre_rotation = CoinAngles{0, kPi / 2, 0, th};
            s.shift = {j, j == 3 ? 1 : j + 1};
            s.post_rotation = CoinAngles{0, -kPi / 2, 0, -th};
            w.substeps.push_back(s);
        }
        w.mass_coin = CoinAngles{0, 0, -kPi / 2, -mass * w.dt};
        w.continuum_gammas = {kSigma1, kMinusISigma3, kMinusISigma2};
        break;
    }
    }
    return w;
}

namespace {

void apply_pointwise(const Mat2& m, std::vector<cdouble>& amp) {
    for (size_t i = 0; i < amp.size(); i += 2) {
        cdouble l = amp[i], r = amp[i + 1];
        amp[i] = m.a * l + m.b * r;
        amp[i + 1] = m.c * l + m.d * r;
    }
}

// Gather shift: out(X) = (in_L(X + dL), in_R(X + dR)), then `post` pointwise.
void gather_and_mix(const LatticeSpec& lat, const std::vector<cdouble>& in,
                    std::vector<cdouble>& out, SiteIndex dl, SiteIndex dr,
                    const Mat2& post) {
    const int nx = lat.n_x, ny = lat.n_y;
    for (int b = 0; b < ny; b++) {
        const int bl = ((b + dl.b) % ny + ny) % ny;
        const int br = ((b + dr.b) % ny + ny) % ny;
        for (int a = 0; a < nx; a++) {
            const int al = ((a + dl.a) % nx + nx) % nx;
            const int ar = ((a + dr.a) % nx + nx) % nx;
            cdouble l = in[2 * (static_cast<size_t>(bl) * nx + al)];
            cdouble r = in[2 * (static_cast<size_t>(br) * nx + ar) + 1];
            size_t o = 2 * (static_cast<size_t>(b) * nx + a);
            out[o] = post.a * l + post.b * r;
            out[o + 1] = post.c * l + post.d * r;
        }
    }
}

// Same with a site-dependent gauge coin folded in front of `post`.
void gather_and_mix_gauged(const LatticeSpec& lat, const std::vector<cdouble>& in,
                           std::vector<cdouble>& out, SiteIndex dl, SiteIndex dr,
                           const Mat2& post, const FieldConfig& gauge, int slot,
                           double t) {
    const int nx = lat.n_x, ny = lat.n_y;
    for (int b = 0; b < ny; b++) {
        const int bl = ((b + dl.b) % ny + ny) % ny;
        const int br = ((b + dr.b) % ny + ny) % ny;
        for (int a = 0; a < nx; a++) {
            const int al = ((a + dl.a) % nx + nx) % nx;
            const int ar = ((a + dr.a) % nx + nx) % nx;
            cdouble l = in[2 * (static_cast<size_t>(bl) * nx + al)];
            cdouble r = in[2 * (static_cast<size_t>(br) * nx + ar) + 1];
            Mat2 m = post * u2_from_angles(gauge.coin(slot, t, {a, b}));
            size_t o = 2 * (static_cast<size_t>(b) * nx + a);
            out[o] = m.a * l + m.b * r;
            out[o + 1] = m.c * l + m.d * r;
        }
    }
}

} // namespace

SpinorField step(const WalkSpec& walk, const SpinorField& field, double t,
                 const FieldConfig* gauge) {
    if (field.lattice.family != walk.family())
        throw std::invalid_argument("field lattice family does not match walk");
    if (gauge && walk.kind != WalkKind::ThreeStepEquilateral)
        throw std::invalid_argument(
            "gauge coins are only defined for the three-step equilateral walk");

    const LatticeSpec& lat = field.lattice;
    SpinorField out(lat);
    std::vector<cdouble> cur = field.amplitudes;

    int sub = 0;
    for (const SubStep& s : walk.substeps) {
        if (s.pre_rotation) apply_pointwise(u2_from_angles(*s.pre_rotation), cur);
        Mat2 post = s.post_rotation ? u2_from_angles(*s.post_rotation) : Mat2::identity();
        SiteIndex dl = direction_delta(lat.family, s.shift.left_dir);
        SiteIndex dr = direction_delta(lat.family, s.shift.right_dir);
        const double tsub = t + sub * walk.dt / 3.0;
        if (gauge && s.coin_slot >= 0 && !gauge->empty_slot(s.coin_slot)) {
            if (gauge->spatially_uniform) {
                Mat2 m = post * u2_from_angles(gauge->coin(s.coin_slot, tsub, {0, 0}));
                gather_and_mix(lat, cur, out.amplitudes, dl, dr, m);
            } else {
                gather_and_mix_gauged(lat, cur, out.amplitudes, dl, dr, post, *gauge,
                                      s.coin_slot, tsub);
            }
        } else {
            gather_and_mix(lat, cur, out.amplitudes, dl, dr, post);
        }
        cur.swap(out.amplitudes);
        sub++;
    }
    if (walk.mass_coin) apply_pointwise(u2_from_angles(*walk.mass_coin), cur);
    out.amplitudes = std::move(cur);
    return out;
}

SpinorField step_adjoint(const WalkSpec& walk, const SpinorField& field) {
    if (field.lattice.family != walk.family())
        throw std::invalid_argument("field lattice family does not match walk");
    const LatticeSpec& lat = field.lattice;
    SpinorField out(lat);
    std::vector<cdouble> cur = field.amplitudes;
    if (walk.mass_coin)
        apply_pointwise(u2_from_angles(*walk.mass_coin).adjoint(), cur);
    for (auto it = walk.substeps.rbegin(); it != walk.substeps.rend(); ++it) {
        if (it->post_rotation)
            apply_pointwise(u2_from_angles(*it->post_rotation).adjoint(), cur);
        Mat2 post = it->pre_rotation ? u2_from_angles(*it->pre_rotation).adjoint()
                                     : Mat2::identity();
        SiteIndex dl = direction_delta(lat.family, it->shift.left_dir);
        SiteIndex dr = direction_delta(lat.family, it->shift.right_dir);
        gather_and_mix(lat, cur, out.amplitudes, {-dl.a, -dl.b}, {-dr.a, -dr.b}, post);
        cur.swap(out.amplitudes);
    }
    out.amplitudes = std::move(cur);
    return out;
}

void evolve(const WalkSpec& walk, SpinorField& field, int steps,
            const FieldConfig* gauge, const std::vector<StepObserver>& observers) {
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    for (const auto& obs : observers) obs(0, 0.0, field);
    for (int n = 0; n < steps; n++) {
        field = step(walk, field, n * walk.dt, gauge);
        for (const auto& obs : observers) obs(n + 1, (n + 1) * walk.dt, field);
    }
}

} // namespace dqw
