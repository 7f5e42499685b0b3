#include "dqw/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace dqw {

namespace {
constexpr double kSqrt3Half = 0.86602540378443864676;

// Index moves for the triangular six-neighbor star (directions 1..6) and the
// honeycomb three-neighbor set, in the (g1, g2) chart.
constexpr int kTriDelta[7][2] = {{0, 0}, {1, 0}, {0, 1}, {-1, 1},
                                 {-1, 0}, {0, -1}, {1, -1}};
constexpr int kHexDelta[4][2] = {{0, 0}, {1, 0}, {0, 1}, {-1, -1}};
} // namespace

void validate(const LatticeSpec& spec) {
    if (spec.n_x < 2 || spec.n_y < 2)
        throw std::invalid_argument("lattice must be at least 2x2");
    if (!(spec.epsilon > 0.0))
        throw std::invalid_argument("lattice spacing must be positive");
}

int direction_count(LatticeFamily family) {
    return family == LatticeFamily::Honeycomb ? 3 : 6;
}

SiteIndex direction_delta(LatticeFamily family, int dir) {
    if (dir < 1 || dir > direction_count(family))
        throw std::invalid_argument("neighbor direction out of range");
    if (family == LatticeFamily::Honeycomb)
        return {kHexDelta[dir][0], kHexDelta[dir][1]};
    return {kTriDelta[dir][0], kTriDelta[dir][1]};
}

Vec2d generator(LatticeFamily family, int which, double epsilon) {
    switch (family) {
    case LatticeFamily::EquilateralTriangle:
        return which == 1 ? Vec2d{epsilon, 0.0}
                          : Vec2d{0.5 * epsilon, kSqrt3Half * epsilon};
    case LatticeFamily::IsoscelesTriangle:
        return which == 1 ? Vec2d{epsilon, 0.0}
                          : Vec2d{0.5 * epsilon, 0.5 * epsilon};
    case LatticeFamily::Honeycomb:
        return which == 1 ? Vec2d{epsilon, 0.0}
                          : Vec2d{-0.5 * epsilon, kSqrt3Half * epsilon};
    }
    throw std::invalid_argument("unknown lattice family");
}

Vec2d neighbor_offset(LatticeFamily family, int dir, double epsilon) {
    SiteIndex d = direction_delta(family, dir);
    Vec2d g1 = generator(family, 1, epsilon);
    Vec2d g2 = generator(family, 2, epsilon);
    return {d.a * g1.x + d.b * g2.x, d.a * g1.y + d.b * g2.y};
}

SiteIndex neighbor(const LatticeSpec& spec, SiteIndex site, int dir) {
    SiteIndex d = direction_delta(spec.family, dir);
    return spec.normalized({site.a + d.a, site.b + d.b});
}

Vec2d position(const LatticeSpec& spec, SiteIndex site) {
    Vec2d g1 = generator(spec.family, 1, spec.epsilon);
    Vec2d g2 = generator(spec.family, 2, spec.epsilon);
    return {site.a * g1.x + site.b * g2.x, site.a * g1.y + site.b * g2.y};
}

int opposite_direction(LatticeFamily family, int dir) {
    if (family == LatticeFamily::Honeycomb)
        throw std::invalid_argument("honeycomb directions have no opposite");
    if (dir < 1 || dir > 6)
        throw std::invalid_argument("neighbor direction out of range");
    return (dir + 2) % 6 + 1;
}

double SpinorField::norm_squared() const {
    double s = 0.0;
    for (const cdouble& z : amplitudes) s += std::norm(z);
    return s;
}

void SpinorField::normalize() {
    double n = std::sqrt(norm_squared());
    if (n == 0.0) return;
    for (cdouble& z : amplitudes) z /= n;
}

} // namespace dqw
