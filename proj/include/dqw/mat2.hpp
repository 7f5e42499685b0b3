#ifndef DQW_MAT2_HPP
#define DQW_MAT2_HPP

#include <cmath>
#include <complex>

namespace dqw {

using cdouble = std::complex<double>;

struct Vec2c {
    cdouble l{0.0, 0.0};
    cdouble r{0.0, 0.0};
};

// Dense complex 2x2 matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
    cdouble a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    static Mat2 identity() { return {}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Vec2c operator*(const Vec2c& v) const {
        return {a * v.l + b * v.r, c * v.l + d * v.r};
    }
    Mat2 adjoint() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }
    cdouble trace() const { return a + d; }
    cdouble det() const { return a * d - b * c; }
};

// Largest absolute entry of U^dag U - I.
inline double unitarity_defect(const Mat2& u) {
    Mat2 g = u.adjoint() * u;
    double m = std::abs(g.a - 1.0);
    m = std::max(m, std::abs(g.b));
    m = std::max(m, std::abs(g.c));
    m = std::max(m, std::abs(g.d - 1.0));
    return m;
}

// Four-angle U(2) parametrization.
struct CoinAngles {
    double alpha = 0.0;
    double xi = 0.0;
    double zeta = 0.0;
    double theta = 0.0;
};

// e^{i alpha} [[e^{i xi} cos th, e^{i zeta} sin th],
//              [-e^{-i zeta} sin th, e^{-i xi} cos th]]
inline Mat2 u2_from_angles(const CoinAngles& g) {
    const cdouble ea = std::polar(1.0, g.alpha);
    const double ct = std::cos(g.theta), st = std::sin(g.theta);
    return {ea * std::polar(1.0, g.xi) * ct, ea * std::polar(1.0, g.zeta) * st,
            -ea * std::polar(1.0, -g.zeta) * st, ea * std::polar(1.0, -g.xi) * ct};
}

} // namespace dqw

#endif
