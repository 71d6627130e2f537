#include "szeta/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace szeta {

namespace {
constexpr double kStepTol = 1e-12;
constexpr double kResidualRel = 1e-10;
constexpr double kDedup = 1e-7;
constexpr int kMaxNewton = 80;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
} // namespace

void SearchRegion::validate() const {
    if (!(re_min < re_max && im_min < im_max))
        throw Error("SearchRegion: need re_min < re_max and im_min < im_max");
    if (!(grid_re > 0 && grid_im > 0)) throw Error("SearchRegion: grid steps must be positive");
}

AnalyticFn AnalyticFn::from(const ZetaEvaluator& z) {
    AnalyticFn fn;
    fn.f = [&z](Complex s) { return z.eval(s); };
    fn.df = [&z](Complex s) { return z.eval_with_derivative(s).second; };
    return fn;
}

int resolve_threads(int requested) {
    if (const char* env = std::getenv("ZETA_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<Complex> find_zeros(const AnalyticFn& fn, const SearchRegion& region, int n_threads) {
    region.validate();
    const double pad_re = region.grid_re, pad_im = region.grid_im;
    const int n_re = static_cast<int>(std::floor((region.re_max - region.re_min) / region.grid_re)) + 1;
    const int n_im = static_cast<int>(std::floor((region.im_max - region.im_min) / region.grid_im)) + 1;

    const int threads = std::max(1, std::min(resolve_threads(n_threads), n_im));
    std::vector<std::vector<Complex>> partial(threads);

    auto worker = [&](int tid) {
        auto& out = partial[tid];
        for (int iy = tid; iy < n_im; iy += threads) {
            const double y = region.im_min + iy * region.grid_im;
            for (int ix = 0; ix < n_re; ++ix) {
                const double x = region.re_min + ix * region.grid_re;
                Complex z(x, y);
                const Complex f0 = fn.f(z);
                if (!finite(f0)) continue;
                const double scale = std::max(std::abs(f0), 1e-300);
                bool converged = false;
                for (int it = 0; it < kMaxNewton; ++it) {
                    const Complex fz = fn.f(z);
                    const Complex dz = fn.df(z);
                    if (!finite(fz) || !finite(dz) || dz == Complex{}) break;
                    const Complex step = fz / dz;
                    if (!finite(step)) break;
                    z -= step;
                    if (std::abs(step) < kStepTol * std::max(1.0, std::abs(z))) {
                        converged = true;
                        break;
                    }
                }
                if (!converged || !finite(z)) continue;
                if (z.real() < region.re_min - pad_re || z.real() > region.re_max + pad_re ||
                    z.imag() < region.im_min - pad_im || z.imag() > region.im_max + pad_im)
                    continue;
                const Complex fz = fn.f(z);
                if (!finite(fz) || std::abs(fz) > kResidualRel * scale) continue;
                out.push_back(z);
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::vector<Complex> all;
    for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end(), [](Complex a, Complex b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    std::vector<Complex> zeros;
    for (Complex z : all) {
        bool dup = false;
        for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
            if (z.imag() - it->imag() > kDedup) break;
            if (std::abs(z - *it) < kDedup) {
                dup = true;
                break;
            }
        }
        if (!dup) zeros.push_back(z);
    }
    return zeros;
}

namespace {

// adaptive trapezoid of f'/f along the straight segment [a, b]
Complex segment_integral(const AnalyticFn& fn, Complex a, Complex b, int depth) {
    const auto g = [&](Complex z) { return fn.df(z) / fn.f(z); };
    const Complex mid = 0.5 * (a + b);
    const Complex coarse = 0.5 * (g(a) + g(b)) * (b - a);
    const Complex fine = 0.5 * (g(a) + g(mid)) * (mid - a) + 0.5 * (g(mid) + g(b)) * (b - mid);
    if (depth <= 0) return fine;
    if (std::abs(fine - coarse) < 1e-6 * (1.0 + std::abs(fine))) return fine;
    return segment_integral(fn, a, mid, depth - 1) + segment_integral(fn, mid, b, depth - 1);
}

} // namespace

int argument_count(const AnalyticFn& fn, double re0, double re1, double im0, double im1) {
    double jx = 0.0, jy = 0.0;
    for (int attempt = 0; attempt < 5; ++attempt) {
        const Complex c1(re0 - jx, im0 - jy), c2(re1 + jx, im0 - jy);
        const Complex c3(re1 + jx, im1 + jy), c4(re0 - jx, im1 + jy);
        bool bad = false;
        for (Complex corner : {c1, c2, c3, c4})
            if (std::abs(fn.f(corner)) < 1e-14) bad = true;
        if (!bad) {
            const Complex integral = segment_integral(fn, c1, c2, 36) +
                                     segment_integral(fn, c2, c3, 36) +
                                     segment_integral(fn, c3, c4, 36) +
                                     segment_integral(fn, c4, c1, 36);
            const double winding = (integral / (2.0 * std::numbers::pi * Complex(0, 1))).real();
            const double rounded = std::round(winding);
            if (std::isfinite(winding) && std::abs(winding - rounded) < 0.2)
                return static_cast<int>(rounded);
        }
        jx += 3e-6 * (attempt + 1);
        jy += 2e-6 * (attempt + 1);
    }
    throw ContourTooClose("argument_count: could not separate the contour from zeros");
}

double critical_exponent(const OrbitTable& table, int order) {
    const ZetaEvaluator z(table, 0, order); // the trivial irrep is always first
    const auto val = [&](double x) { return z.eval(Complex(x, 0)).real(); };
    const int kScan = 400;
    double best_lo = -1, best_hi = -1;
    double prev_x = 1e-9, prev_v = val(prev_x);
    for (int i = 1; i <= kScan; ++i) {
        const double x = double(i) / kScan * (1.0 - 2e-9) + 1e-9;
        const double v = val(x);
        if (prev_v == 0.0 || prev_v * v < 0.0) {
            best_lo = prev_x;
            best_hi = x;
        }
        prev_x = x;
        prev_v = v;
    }
    if (best_lo < 0) throw NoRealZero("critical_exponent: no sign change of Z^{triv,(n)} in (0,1)");
    double lo = best_lo, hi = best_hi;
    const double flo = val(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((val(mid) > 0) == (flo > 0) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double default_grid_im(const OrbitTable& table) {
    const double L = table.longest_length();
    return L > 0 ? std::min(0.25, std::numbers::pi / (4.0 * L)) : 0.25;
}

} // namespace szeta
