#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "szeta/cycle.hpp"

namespace szeta {

struct SearchRegion {
    double re_min = 0.0, re_max = 1.0;
    double im_min = 0.0, im_max = 10.0;
    double grid_re = 0.02, grid_im = 0.25;

    void validate() const;
};

/// A complex-evaluable function with derivative, as fed to the zero search.
struct AnalyticFn {
    std::function<Complex(Complex)> f;
    std::function<Complex(Complex)> df;

    static AnalyticFn from(const ZetaEvaluator& z);
};

struct Resonance {
    Complex s;
    std::string rep;
    int order = 0;
    double residual = 0.0;
    int newton_iterations = 0;
    bool trusted = true; // R_n(s) <= 1e-2 at the zero
};

/// Newton iteration from every grid node; converged points are accepted with
/// residual < 1e-10 * local scale and |step| < 1e-12, dedup'd within 1e-7,
/// and kept when inside the slightly padded region. Deterministic order
/// (sorted by Im, then Re). n_threads = 0 picks ZETA_THREADS or hardware.
std::vector<Complex> find_zeros(const AnalyticFn& fn, const SearchRegion& region,
                                int n_threads = 0);

/// Winding number of f along the rectangle boundary via adaptive trapezoid
/// quadrature of f'/f; retries with a jittered contour when a zero sits too
/// close to it, then throws ContourTooClose.
int argument_count(const AnalyticFn& fn, double re0, double re1, double im0, double im1);

/// Largest real zero of the trivial-irrep truncated zeta on (0,1): the
/// critical exponent delta. Sign-change scan plus bisection to 1e-12.
double critical_exponent(const OrbitTable& table, int order);

/// Default Im grid step: min(0.25, pi / (4 L_max)).
double default_grid_im(const OrbitTable& table);

int resolve_threads(int requested);

} // namespace szeta
