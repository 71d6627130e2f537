#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "szeta/group.hpp"
#include "szeta/spectral.hpp"
#include "szeta/words.hpp"

namespace szeta {

/// Fixed float format for byte-identical outputs: %.12e.
std::string fmt_float(double x);

void write_orbits_csv(std::ostream& os, const Group& group,
                      const std::vector<PrimeClassDatum>& classes);
void write_orbits_json(std::ostream& os, const Group& group,
                       const std::vector<PrimeClassDatum>& classes);

void write_resonances_csv(std::ostream& os, const ResonanceSet& set);
void write_resonances_json(std::ostream& os, const ResonanceSet& set);
ResonanceSet read_resonances_csv(std::istream& is);

void write_envelope_csv(std::ostream& os, const std::vector<EnvelopeSample>& samples,
                        const std::string& rep);

/// Scatter of the resonance set colored by representation, written as a
/// self-contained SVG. Color map follows the figure conventions:
/// I_1 dark blue, I_2 light blue, II_1 red, II_2 orange, III/V greens.
void write_resonances_svg(std::ostream& os, const ResonanceSet& set);

void print_character_table(std::ostream& os, const Group& group);
void write_character_table_csv(std::ostream& os, const Group& group);

} // namespace szeta
