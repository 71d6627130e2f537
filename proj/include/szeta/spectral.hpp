#pragma once

#include <optional>
#include <string>
#include <vector>

#include "szeta/resonance.hpp"

namespace szeta {

/// Resonance list plus where it came from; members sorted by Im.
struct ResonanceSet {
    std::vector<Resonance> members;
    std::string surface;
    int order = 0;
    SearchRegion region;

    void sort_by_im();
};

struct EnvelopeSample {
    double t = 0.0;
    std::optional<double> h; // empty window -> no value (gap marker)
};

/// h^{chi}_w(t) = max Re(s) over zeros with |Im(s) - t| <= w, per grid point.
/// `rep` filters by representation label; empty string keeps everything.
std::vector<EnvelopeSample> envelope(const ResonanceSet& set, const std::string& rep,
                                     double window, double t_min, double t_max, double t_step);

/// sup Re(s) over zeros with |Im(s)| > K, excluding the unique leading zero
/// within 1e-6 of delta. Throws EmptyAboveK when nothing remains.
double gap(const ResonanceSet& set, const std::string& rep, double K, double delta);

} // namespace szeta
