#ifndef DQW_LATTICE_HPP
#define DQW_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "dqw/mat2.hpp"

namespace dqw {

enum class LatticeFamily { EquilateralTriangle, IsoscelesTriangle, Honeycomb };

struct Vec2d {
    double x = 0.0;
    double y = 0.0;
};

// Integer chart: site = a*g1 + b*g2 with the family's generating vectors,
// reduced modulo (n_x, n_y).
struct SiteIndex {
    int a = 0;
    int b = 0;
};

struct LatticeSpec {
    LatticeFamily family = LatticeFamily::EquilateralTriangle;
    int n_x = 2;
    int n_y = 2;
    double epsilon = 1.0;

    int site_count() const { return n_x * n_y; }
    int site_id(SiteIndex s) const { return s.b * n_x + s.a; }
    SiteIndex normalized(SiteIndex s) const {
        return {((s.a % n_x) + n_x) % n_x, ((s.b % n_y) + n_y) % n_y};
    }
};

void validate(const LatticeSpec& spec);

// Directions are 1-based: 1..6 for the triangular families, 1..3 honeycomb.
int direction_count(LatticeFamily family);

// Index-space move of one neighbor step.
SiteIndex direction_delta(LatticeFamily family, int dir);

// Physical offset X_dir - X (uses the family's real geometry).
Vec2d neighbor_offset(LatticeFamily family, int dir, double epsilon);

// Generating vectors g1, g2 of the position map.
Vec2d generator(LatticeFamily family, int which, double epsilon);

SiteIndex neighbor(const LatticeSpec& spec, SiteIndex site, int dir);
Vec2d position(const LatticeSpec& spec, SiteIndex site);

// dir + 3 mod 6 for the triangular families; honeycomb directions have no
// opposite within the neighbor set.
int opposite_direction(LatticeFamily family, int dir);

// Two complex amplitudes per site, b-major storage.
struct SpinorField {
    LatticeSpec lattice;
    std::vector<cdouble> amplitudes; // psiL, psiR interleaved

    SpinorField() = default;
    explicit SpinorField(const LatticeSpec& spec)
        : lattice(spec), amplitudes(2 * static_cast<size_t>(spec.site_count())) {}

    cdouble& psi_l(SiteIndex s) { return amplitudes[2 * lattice.site_id(s)]; }
    cdouble& psi_r(SiteIndex s) { return amplitudes[2 * lattice.site_id(s) + 1]; }
    cdouble psi_l(SiteIndex s) const { return amplitudes[2 * lattice.site_id(s)]; }
    cdouble psi_r(SiteIndex s) const { return amplitudes[2 * lattice.site_id(s) + 1]; }

    double norm_squared() const;
    double site_density(SiteIndex s) const {
        return std::norm(psi_l(s)) + std::norm(psi_r(s));
    }
    void normalize();
};

} // namespace dqw

#endif
