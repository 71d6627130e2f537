#include "szeta/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace szeta {

void ResonanceSet::sort_by_im() {
    std::sort(members.begin(), members.end(), [](const Resonance& a, const Resonance& b) {
        if (a.s.imag() != b.s.imag()) return a.s.imag() < b.s.imag();
        return a.s.real() < b.s.real();
    });
}

std::vector<EnvelopeSample> envelope(const ResonanceSet& set, const std::string& rep,
                                     double window, double t_min, double t_max, double t_step) {
    if (!(window > 0)) throw Error("envelope: window must be positive");
    if (!(t_step > 0)) throw Error("envelope: t_step must be positive");
    std::vector<EnvelopeSample> out;
    for (double t = t_min; t <= t_max + 1e-12; t += t_step) {
        EnvelopeSample sample;
        sample.t = t;
        double best = -std::numeric_limits<double>::infinity();
        bool any = false;
        for (const auto& r : set.members) {
            if (!rep.empty() && r.rep != rep) continue;
            if (std::abs(r.s.imag() - t) <= window) {
                best = std::max(best, r.s.real());
                any = true;
            }
        }
        if (any) sample.h = best;
        out.push_back(sample);
    }
    return out;
}

double gap(const ResonanceSet& set, const std::string& rep, double K, double delta) {
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& r : set.members) {
        if (!rep.empty() && r.rep != rep) continue;
        if (std::abs(r.s - Complex(delta, 0.0)) < 1e-6) continue; // leading zero at delta
        if (std::abs(r.s.imag()) > K) {
            best = std::max(best, r.s.real());
            any = true;
        }
    }
    if (!any) throw EmptyAboveK("gap: no resonances above K after excluding delta");
    return best;
}

} // namespace szeta
