#pragma once

#include <complex>
#include <span>
#include <vector>

#include "szeta/errors.hpp"

namespace szeta {

using Complex = std::complex<double>;

/// Real 2x2 matrix acting on C by its Moebius transformation u -> (au+b)/(cu+d).
/// All matrices in this library have determinant +1 or -1.
struct Matrix2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Matrix2 operator*(const Matrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    /// Inverse for det = +-1 matrices (adjugate over determinant).
    Matrix2 inverse() const;

    static Matrix2 identity() { return {}; }
    static Matrix2 translation(double t) { return {1.0, t, 0.0, 1.0}; }
};

/// A real matrix stored as mat * 2^exp2 with the max-abs entry of mat in [1,2).
/// Long products of generators stay representable this way for geodesic
/// lengths up to ~1400 where raw doubles would overflow around length 709.
struct ScaledMatrix {
    Matrix2 mat;
    int exp2 = 0;
    int det_sign = 1; // sign of the true determinant, tracked exactly through products

    static ScaledMatrix from(const Matrix2& m);

    /// log(|Tr|) of the true matrix; -inf if the scaled trace vanishes.
    double log_abs_trace() const;
};

/// Euclidean disk centered on the real line.
struct Disk {
    double center = 0.0;
    double radius = 1.0;

    double left() const { return center - radius; }
    double right() const { return center + radius; }
};

/// (az+b)/(cz+d); throws PoleHit when |cz+d| is below tolerance.
Complex mobius_apply(const Matrix2& m, Complex z);

/// Image of a real-centered disk under a real-coefficient Moebius map, via
/// the images of the two real diameter endpoints. The pole -d/c (when c != 0)
/// must lie strictly outside the closed disk.
Disk mobius_image_disk(const Matrix2& m, const Disk& d);

/// Ordered product of the sequence, renormalized after every multiply.
ScaledMatrix product_scaled(std::span<const Matrix2> ms);

/// Displacement length l = 2*arccosh(|Tr|/2) of a hyperbolic det +1 element,
/// evaluated in log-scaled form. Throws NotHyperbolic when |Tr| <= 2 + tol,
/// WrongDeterminant when the tracked determinant sign is -1.
double displacement_length(const ScaledMatrix& m);

/// Cayley transform u -> -i(u-1)/(u+1) mapping the unit disk to the upper
/// half plane; the unit circle goes to the real line.
Complex cayley(Complex z);

} // namespace szeta
