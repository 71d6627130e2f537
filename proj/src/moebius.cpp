#include "szeta/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace szeta {

namespace {
constexpr double kPoleTol = 1e-13;
constexpr double kDetTol = 1e-9;
constexpr double kLog2 = 0.6931471805599453094;
} // namespace

Matrix2 Matrix2::inverse() const {
    const double dt = det();
    if (std::abs(std::abs(dt) - 1.0) > 1e-6)
        throw WrongDeterminant("Matrix2::inverse: determinant not +-1");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Complex mobius_apply(const Matrix2& m, Complex z) {
    const Complex den = m.c * z + m.d;
    if (std::abs(den) < kPoleTol * std::max(1.0, std::abs(z)))
        throw PoleHit("mobius_apply: z at the pole of the transformation");
    return (m.a * z + m.b) / den;
}

Disk mobius_image_disk(const Matrix2& m, const Disk& d) {
    if (m.c != 0.0) {
        const double pole = -m.d / m.c;
        if (std::abs(pole - d.center) <= d.radius)
            throw PoleInsideDisk("mobius_image_disk: pole inside the closed disk");
    }
    // Real matrix, real-centered disk: the image is again a real-centered disk
    // whose diameter endpoints are the images of center +- radius.
    const double p = mobius_apply(m, Complex(d.left(), 0.0)).real();
    const double q = mobius_apply(m, Complex(d.right(), 0.0)).real();
    return Disk{0.5 * (p + q), 0.5 * std::abs(q - p)};
}

ScaledMatrix ScaledMatrix::from(const Matrix2& m) {
    const double dt = m.det();
    if (std::abs(std::abs(dt) - 1.0) > kDetTol)
        throw WrongDeterminant("ScaledMatrix: input determinant not +-1");
    ScaledMatrix s;
    s.det_sign = dt > 0.0 ? 1 : -1;
    const double mx = std::max(std::max(std::abs(m.a), std::abs(m.b)),
                               std::max(std::abs(m.c), std::abs(m.d)));
    int e = 0;
    std::frexp(mx, &e); // mx = f * 2^e with f in [0.5,1)
    e -= 1;             // so that mx * 2^-e lands in [1,2)
    const double f = std::ldexp(1.0, -e);
    s.mat = {m.a * f, m.b * f, m.c * f, m.d * f};
    s.exp2 = e;
    return s;
}

double ScaledMatrix::log_abs_trace() const {
    const double t = std::abs(mat.trace());
    if (t == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(t) + exp2 * kLog2;
}

ScaledMatrix product_scaled(std::span<const Matrix2> ms) {
    if (ms.empty())
        throw Error("product_scaled: empty sequence");
    ScaledMatrix acc = ScaledMatrix::from(ms[0]);
    for (size_t i = 1; i < ms.size(); ++i) {
        const ScaledMatrix next = ScaledMatrix::from(ms[i]);
        const Matrix2 p = acc.mat * next.mat;
        acc.det_sign *= next.det_sign;
        const double mx = std::max(std::max(std::abs(p.a), std::abs(p.b)),
                                   std::max(std::abs(p.c), std::abs(p.d)));
        int e = 0;
        std::frexp(mx, &e);
        e -= 1;
        const double f = std::ldexp(1.0, -e);
        acc.mat = {p.a * f, p.b * f, p.c * f, p.d * f};
        acc.exp2 += next.exp2 + e;
    }
    return acc;
}

double displacement_length(const ScaledMatrix& m) {
    if (m.det_sign < 0)
        throw WrongDeterminant("displacement_length: determinant -1 (orientation reversing)");
    const double t = std::abs(m.mat.trace()); // true |Tr| = t * 2^exp2
    const double log_tr = m.log_abs_trace();
    // Hyperbolicity: |Tr| > 2  <=>  log|Tr| > log 2.
    if (!(log_tr > kLog2 + 1e-12)) {
        // re-check in plain arithmetic near the boundary
        const double tr_plain = t * std::ldexp(1.0, m.exp2);
        if (!(tr_plain > 2.0 + 1e-9))
            throw NotHyperbolic("displacement_length: |Tr| <= 2");
    }
    // l = 2 arccosh(|Tr|/2) = 2( log|Tr| + log(1 + sqrt(1 - 4/Tr^2)) - log 2 ).
    // 4/Tr^2 = 4 * 2^(-2 exp2) / t^2, which underflows harmlessly to 0 for long words.
    double inv_tr2 = 0.0;
    if (2 * m.exp2 < 1000) {
        const double tr_sq = t * t * std::ldexp(1.0, 2 * m.exp2);
        inv_tr2 = 4.0 / tr_sq;
    }
    return 2.0 * (log_tr + std::log1p(std::sqrt(std::max(0.0, 1.0 - inv_tr2))) - kLog2);
}

Complex cayley(Complex z) {
    const Complex den = z + 1.0;
    if (std::abs(den) < kPoleTol)
        throw PoleHit("cayley: pole at z = -1");
    return Complex(0.0, -1.0) * (z - 1.0) / den;
}

} // namespace szeta
