#include "dqw/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqw {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt3 = 1.7320508075688772935;

double wrap_into(double v, double half) {
    double w = std::remainder(v, 2.0 * half);
    if (w <= -half + 0.0) w += 2.0 * half;
    return w;
}
} // namespace

double bz_half_height() { return kPi / kSqrt3; }

WaveVector canonical(WaveVector k) {
    return {wrap_into(k.kx, kPi), wrap_into(k.ky, bz_half_height())};
}

Vec2d momentum_offset(WalkKind kind, int dir) {
    LatticeFamily f = lattice_family(kind);
    if (f == LatticeFamily::IsoscelesTriangle)
        f = LatticeFamily::EquilateralTriangle; // zone charted in the equilateral dual
    return neighbor_offset(f, dir, 1.0);
}

WaveVector chart_from_physical(WalkKind kind, WaveVector k) {
    if (lattice_family(kind) == LatticeFamily::IsoscelesTriangle)
        return {k.kx, k.ky / kSqrt3};
    return k;
}

Mat2 walk_matrix(const WalkSpec& walk, WaveVector k) {
    Mat2 w = Mat2::identity();
    for (const SubStep& s : walk.substeps) {
        Vec2d vl = momentum_offset(walk.kind, s.shift.left_dir);
        Vec2d vr = momentum_offset(walk.kind, s.shift.right_dir);
        Mat2 m{std::polar(1.0, -(k.kx * vl.x + k.ky * vl.y)), 0.0, 0.0,
               std::polar(1.0, -(k.kx * vr.x + k.ky * vr.y))};
        if (s.post_rotation) m = u2_from_angles(*s.post_rotation) * m;
        if (s.pre_rotation) m = m * u2_from_angles(*s.pre_rotation);
        w = m * w;
    }
    if (walk.mass_coin) w = u2_from_angles(*walk.mass_coin) * w;
    return w;
}

std::pair<double, double> dispersion_at(const WalkSpec& walk, WaveVector k) {
    Mat2 w = walk_matrix(walk, k);
    if (unitarity_defect(w) > 1e-9)
        throw std::runtime_error("walk matrix lost unitarity");
    cdouble tr = w.trace();
    cdouble det = w.det();
    if (std::abs(tr.imag()) < 1e-10 && std::abs(det - 1.0) < 1e-10) {
        double omega = std::acos(std::clamp(tr.real() / 2.0, -1.0, 1.0));
        return {omega, -omega};
    }
    auto [p, q] = eigenphases_direct(walk, k);
    return {p, q};
}

std::pair<double, double> eigenphases_direct(const WalkSpec& walk, WaveVector k) {
    Mat2 w = walk_matrix(walk, k);
    cdouble tr = w.trace(), det = w.det();
    cdouble disc = std::sqrt(tr * tr - 4.0 * det);
    cdouble l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    double p1 = std::arg(l1), p2 = std::arg(l2);
    if (p1 < p2) std::swap(p1, p2);
    return {p1, p2};
}

Vec2c polarization(const WalkSpec& walk, WaveVector k, int branch) {
    Mat2 w = walk_matrix(walk, k);
    double omega = dispersion_at(walk, k).first;
    cdouble lambda = std::polar(1.0, branch >= 0 ? omega : -omega);
    // null vector of (W - lambda I), from the larger of the two row choices
    Vec2c v1{w.b, lambda - w.a};
    Vec2c v2{lambda - w.d, w.c};
    double n1 = std::norm(v1.l) + std::norm(v1.r);
    double n2 = std::norm(v2.l) + std::norm(v2.r);
    Vec2c v = n1 >= n2 ? v1 : v2;
    double n = std::sqrt(std::max(n1, n2));
    if (n < 1e-15) return {1.0, 0.0}; // degenerate point: any vector works
    return {v.l / n, v.r / n};
}

DispersionResult scan_bz(const WalkSpec& walk, int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("scan grid too small");
    DispersionResult res;
    res.nx = nx;
    res.ny = ny;
    res.k.reserve(static_cast<size_t>(nx) * ny);
    res.omega_plus.reserve(static_cast<size_t>(nx) * ny);
    const double by = bz_half_height();
    for (int i = 0; i < nx; i++) {
        double kx = -kPi + (i + 1) * (2.0 * kPi / nx);
        for (int j = 0; j < ny; j++) {
            double ky = -by + (j + 1) * (2.0 * by / ny);
            res.k.push_back({kx, ky});
            res.omega_plus.push_back(dispersion_at(walk, {kx, ky}).first);
        }
    }
    return res;
}

namespace {

double omega_at(const WalkSpec& walk, double kx, double ky) {
    return dispersion_at(walk, {kx, ky}).first;
}

// Coordinate descent clamped to the closed zone rectangle; the zone is not a
// period cell for every walk, so the search never wraps.
void refine_min(const WalkSpec& walk, double& kx, double& ky, double h0) {
    const double by = bz_half_height();
    double f = omega_at(walk, kx, ky);
    double h = h0;
    while (h >= 1e-8) {
        bool moved = false;
        const double cand[4][2] = {{h, 0}, {-h, 0}, {0, h}, {0, -h}};
        for (auto& c : cand) {
            double nx = std::clamp(kx + c[0], -kPi, kPi);
            double ny = std::clamp(ky + c[1], -by, by);
            double v = omega_at(walk, nx, ny);
            if (v < f) {
                f = v;
                kx = nx;
                ky = ny;
                moved = true;
            }
        }
        if (!moved) h *= 0.5;
    }
}

} // namespace

GapReport min_gap(const WalkSpec& walk, int grid_n) {
    const double by = bz_half_height();
    const int n = grid_n;
    std::vector<double> grid(static_cast<size_t>(n) * n);
    double coarse_min = 1e300;
    for (int i = 0; i < n; i++) {
        double kx = -kPi + (i + 1) * (2.0 * kPi / n);
        for (int j = 0; j < n; j++) {
            double ky = -by + (j + 1) * (2.0 * by / n);
            double v = omega_at(walk, kx, ky);
            grid[static_cast<size_t>(i) * n + j] = v;
            coarse_min = std::min(coarse_min, v);
        }
    }

    // local minima of the coarse grid near the coarse minimum (clamped
    // neighborhoods: the rectangle need not be periodic for every walk)
    const double band = std::max(1e-4, 2.0 * kPi / n);
    std::vector<std::pair<double, double>> seeds;
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            double v = grid[static_cast<size_t>(i) * n + j];
            if (v > coarse_min + band) continue;
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; di++)
                for (int dj = -1; dj <= 1; dj++) {
                    int ii = i + di, jj = j + dj;
                    if ((di == 0 && dj == 0) || ii < 0 || ii >= n || jj < 0 || jj >= n)
                        continue;
                    if (grid[static_cast<size_t>(ii) * n + jj] < v) {
                        is_min = false;
                        break;
                    }
                }
            if (is_min)
                seeds.emplace_back(-kPi + (i + 1) * (2.0 * kPi / n),
                                   -by + (j + 1) * (2.0 * by / n));
        }
    }

    std::vector<std::pair<double, WaveVector>> refined;
    double best = coarse_min;
    for (auto& [kx0, ky0] : seeds) {
        double kx = kx0, ky = ky0;
        refine_min(walk, kx, ky, 2.0 * kPi / n);
        double v = omega_at(walk, kx, ky);
        best = std::min(best, v);
        refined.push_back({v, {kx, ky}});
    }

    GapReport rep;
    rep.omega_min = best;
    rep.gap = 2.0 * best;

    const double keep_tol = 1e-7;
    const double cluster_dist = 1e-4;

    // flat zone-edge lines at the minimum
    auto edge_flat = [&](char axis, double fixed) {
        double lo = 1e300, hi = -1e300;
        const int m = 1024;
        for (int s = 0; s < m; s++) {
            double v = axis == 'x'
                           ? omega_at(walk, fixed, -by + (s + 0.5) * (2.0 * by / m))
                           : omega_at(walk, -kPi + (s + 0.5) * (2.0 * kPi / m), fixed);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return (hi - lo < 1e-9) && (lo <= best + keep_tol);
    };
    if (edge_flat('x', kPi)) rep.degenerate_lines.push_back({'x', kPi});
    if (edge_flat('y', by)) rep.degenerate_lines.push_back({'y', by});

    auto on_degenerate_line = [&](const WaveVector& k) {
        for (const auto& ln : rep.degenerate_lines) {
            if (ln.fixed_axis == 'x' && std::abs(std::abs(k.kx) - ln.fixed_value) < 1e-6)
                return true;
            if (ln.fixed_axis == 'y' && std::abs(std::abs(k.ky) - ln.fixed_value) < 1e-6)
                return true;
        }
        return false;
    };

    std::vector<WaveVector> kept;
    for (auto& [v, k] : refined) {
        if (v > best + keep_tol) continue;
        if (on_degenerate_line(k)) continue;
        bool dup = false;
        for (const auto& other : kept)
            if (std::hypot(k.kx - other.kx, k.ky - other.ky) < cluster_dist) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(k);
    }

    // expand zone-boundary representatives to their +- copies, as the zone
    // boundary has two conventional labels
    std::vector<WaveVector> expanded;
    for (const auto& k : kept) {
        std::vector<double> xs{k.kx}, ys{k.ky};
        if (std::abs(std::abs(k.kx) - kPi) < 1e-6) xs = {kPi, -kPi};
        if (std::abs(std::abs(k.ky) - by) < 1e-6) ys = {by, -by};
        for (double x : xs)
            for (double y : ys) {
                WaveVector c{x, y};
                bool dup = false;
                for (const auto& other : expanded)
                    if (std::hypot(c.kx - other.kx, c.ky - other.ky) < cluster_dist) {
                        dup = true;
                        break;
                    }
                if (!dup) expanded.push_back(c);
            }
    }
    std::sort(expanded.begin(), expanded.end(), [](const WaveVector& a, const WaveVector& b) {
        return a.kx != b.kx ? a.kx < b.kx : a.ky < b.ky;
    });
    rep.minimizers = std::move(expanded);
    return rep;
}

ConeReport cone_slope_check(const WalkSpec& walk, double radius, int directions) {
    if (!(radius > 0.0) || directions < 2)
        throw std::invalid_argument("bad cone-check parameters");
    ConeReport rep;
    rep.slopes.reserve(directions);
    double sum = 0.0;
    for (int i = 0; i < directions; i++) {
        double th = 2.0 * kPi * i / directions;
        WaveVector k = chart_from_physical(
            walk.kind, {radius * std::cos(th), radius * std::sin(th)});
        double s = dispersion_at(walk, k).first / radius;
        rep.slopes.push_back(s);
        sum += s;
    }
    rep.mean_slope = sum / directions;
    double worst = 0.0;
    for (double s : rep.slopes)
        worst = std::max(worst, std::abs(s - rep.mean_slope));
    rep.max_anisotropy = rep.mean_slope > 0 ? worst / rep.mean_slope : 0.0;
    return rep;
}

} // namespace dqw
