// szeta: symmetry-factorized Selberg zeta functions on symmetric n-funneled
// Schottky surfaces -- orbit tables, truncated zeta evaluation, resonance
// search, and spectral-gap postprocessing.
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "szeta/cycle.hpp"
#include "szeta/io.hpp"
#include "szeta/resonance.hpp"
#include "szeta/spectral.hpp"

using namespace szeta;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

GroupChoice parse_group(const std::string& g) {
    if (g == "full") return GroupChoice::Full;
    if (g == "klein") return GroupChoice::Klein;
    if (g == "trivial") return GroupChoice::Trivial;
    throw UsageError("group must be one of full|klein|trivial");
}

Complex parse_complex(const std::string& text) {
    // accepts "x", "x+yi", "x-yi"
    std::string t = text;
    if (!t.empty() && (t.back() == 'i' || t.back() == 'j')) {
        t.pop_back();
        size_t split = t.find_last_of("+-");
        if (split == std::string::npos || split == 0)
            return Complex(0.0, std::stod(t.empty() || t == "+" || t == "-" ? t + "1" : t));
        const double re = std::stod(t.substr(0, split));
        std::string imtxt = t.substr(split);
        if (imtxt == "+" || imtxt == "-") imtxt += "1";
        return Complex(re, std::stod(imtxt));
    }
    return Complex(std::stod(t), 0.0);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw Error("cannot open output file " + path);
    return file;
}

struct TableArgs {
    std::string surface = "sym:3:0.5930";
    std::string group = "full";
    int order = 6;
    std::string enumerator = "auto";

    IfsScheme scheme() const { return build_scheme(parse_surface(surface)); }
    OrbitTable table(const IfsScheme& s) const {
        const Enumerator e = enumerator == "brute"     ? Enumerator::BruteForce
                             : enumerator == "reduced" ? Enumerator::Reduced
                                                       : Enumerator::Auto;
        return OrbitTable::build(s, s.group_for(parse_group(group)), order, e);
    }
    void add_to(CLI::App* cmd) {
        cmd->add_option("--surface", surface, "surface spec, e.g. sym:3:0.5930 or bs:7,7,7.01");
        cmd->add_option("--group", group, "symmetry group: full|klein|trivial")
            ->check(CLI::IsMember({"full", "klein", "trivial"}));
        cmd->add_option("--order", order, "cycle-expansion truncation order")
            ->check(CLI::Range(0, 16));
        cmd->add_option("--enumerator", enumerator, "orbit enumerator: auto|brute|reduced")
            ->check(CLI::IsMember({"auto", "brute", "reduced"}));
    }
};

int run_selftest() {
    // quick wiring check: trace identity, factorization, enumerator cross-check
    const IfsScheme s = build_flow_adapted({3, 0.5930});
    if (!cross_check(s, s.symmetry(), 4)) return kExitNumerical;

    const OrbitTable t = OrbitTable::build(s, s.symmetry(), 4);
    const OrbitTable tt =
        OrbitTable::build(s, s.group_for(GroupChoice::Trivial), 8, Enumerator::BruteForce);
    const ZetaEvaluator full(t, -1, 4);
    const ZetaEvaluator triv(tt, 0, 8);
    for (const Complex sv : {Complex{1.7, 2.0}, Complex{2.5, -1.0}, Complex{2.0, 0.0}}) {
        if (std::abs(full.eval(sv) / triv.eval(sv) - 1.0) > 1e-8) {
            std::cerr << "selftest: factorization identity failed at s = " << sv << "\n";
            return kExitNumerical;
        }
    }

    const Group& G = s.symmetry();
    // trace identity at n = 2, s = 0.7
    const int n = 2;
    std::vector<GClosedPair> pairs;
    Word w;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n + 1) {
            for (int g = 0; g < G.size(); ++g)
                if (G.apply(g, w.back()) == w.front()) pairs.push_back({w, g});
            return;
        }
        for (int j = 1; j <= s.n_symbols(); ++j)
            if (s.adjacent(w.back(), j)) {
                w.push_back(j);
                self(self);
                w.pop_back();
            }
    };
    for (int start = 1; start <= s.n_symbols(); ++start) {
        w.assign(1, start);
        rec(rec);
    }
    Complex plain{}, reduced{};
    for (const auto& p : pairs) {
        const int m = G.order(p.g);
        const double x =
            displacement_length(closed_word_matrix(s, iterate_pair(G, p, m).word)) / m;
        const Complex weight = std::exp(Complex(-0.7 * x)) / (-std::expm1(-x));
        if (p.g == G.identity()) plain += weight;
        for (size_t ir = 0; ir < G.irreps().size(); ++ir)
            reduced += double(G.irreps()[ir].dim) / G.size() *
                       G.character_value(static_cast<int>(ir), p.g) * weight;
    }
    if (std::abs(plain - reduced) > 1e-10 * std::abs(plain)) {
        std::cerr << "selftest: trace identity failed\n";
        return kExitNumerical;
    }
    std::cout << "selftest: trace identity, factorization, cross-check all passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry-factorized Selberg zeta toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a key=value file");
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (ZETA_THREADS overrides)");

    // ---- surface-info ----
    auto* info = app.add_subcommand("surface-info", "print scheme data and validation report");
    std::string info_surface = "sym:3:0.5930";
    info->add_option("--surface", info_surface, "surface spec");

    // ---- psi-for-length ----
    auto* pfl = app.add_subcommand("psi-for-length", "solve psi for a target funnel width");
    int pfl_nf = 3;
    double pfl_len = 7.0;
    pfl->add_option("--nf", pfl_nf, "number of funnels")->required();
    pfl->add_option("--length", pfl_len, "target funnel width")->required();

    // ---- chartable ----
    auto* chart = app.add_subcommand("chartable", "print a character table");
    std::string chart_group = "d3z2";
    std::string chart_csv;
    chart->add_option("--family", chart_group, "d3z2|d4z2|d5z2|d6z2|klein|z2");
    chart->add_option("--csv", chart_csv, "also write CSV to this path");

    // ---- orbits ----
    auto* orbits = app.add_subcommand("orbits", "enumerate prime classes to CSV");
    TableArgs orbit_args;
    orbit_args.add_to(orbits);
    std::string orbits_out = "-";
    std::string orbits_json;
    orbits->add_option("--out", orbits_out, "CSV output path ('-' for stdout)");
    orbits->add_option("--json", orbits_json, "also write JSON to this path");

    // ---- zeta ----
    auto* zeta = app.add_subcommand("zeta", "evaluate a truncated zeta function");
    TableArgs zeta_args;
    zeta_args.add_to(zeta);
    std::string zeta_rep = "all";
    std::string zeta_s = "0.5+0i";
    zeta->add_option("--rep", zeta_rep, "irrep label or 'all' for the full product");
    zeta->add_option("--s", zeta_s, "evaluation point, e.g. 0.5+1000i");

    // ---- resonances ----
    auto* res = app.add_subcommand("resonances", "locate zeros in a rectangle");
    TableArgs res_args;
    res_args.add_to(res);
    std::string res_reps = "all";
    std::string res_rect = "0,0.4,0,30";
    std::string res_out = "-";
    std::string res_json, res_svg;
    double res_grid_re = 0.02, res_grid_im = 0.0;
    res->add_option("--reps", res_reps, "comma list of irrep labels, or 'all'");
    res->add_option("--rect", res_rect, "re0,re1,im0,im1");
    res->add_option("--grid-re", res_grid_re, "Newton seed spacing along Re");
    res->add_option("--grid-im", res_grid_im, "Newton seed spacing along Im (0 = auto)");
    res->add_option("--out", res_out, "CSV output path");
    res->add_option("--json", res_json, "also write JSON");
    res->add_option("--svg", res_svg, "also write an SVG scatter");

    // ---- delta ----
    auto* delta_cmd = app.add_subcommand("delta", "critical exponent (leading real zero)");
    TableArgs delta_args;
    delta_args.add_to(delta_cmd);

    // ---- error-scan ----
    auto* escan = app.add_subcommand("error-scan", "relative error R_n along a horizontal line");
    TableArgs escan_args;
    escan_args.add_to(escan);
    double escan_im = 1000.0, escan_re0 = -0.3, escan_re1 = 1.0;
    int escan_count = 50;
    std::string escan_out = "-";
    escan->add_option("--im", escan_im, "imaginary part of the scan line");
    escan->add_option("--re0", escan_re0, "left end");
    escan->add_option("--re1", escan_re1, "right end");
    escan->add_option("--count", escan_count, "number of grid points");
    escan->add_option("--out", escan_out, "CSV output path");

    // ---- envelope ----
    auto* env = app.add_subcommand("envelope", "windowed max of Re(s) from a resonance CSV");
    std::string env_in, env_out = "-", env_rep;
    double env_window = 100.0, env_tmin = 0.0, env_tmax = 1000.0, env_tstep = 10.0;
    env->add_option("--in", env_in, "resonance CSV")->required();
    env->add_option("--rep", env_rep, "filter by irrep label");
    env->add_option("--window", env_window, "window half-width w");
    env->add_option("--tmin", env_tmin, "grid start");
    env->add_option("--tmax", env_tmax, "grid end");
    env->add_option("--tstep", env_tstep, "grid step");
    env->add_option("--out", env_out, "CSV output path");

    // ---- gap ----
    auto* gap_cmd = app.add_subcommand("gap", "spectral gap G_K from a resonance CSV");
    std::string gap_in, gap_rep;
    double gap_K = 0.0, gap_delta = -1.0;
    gap_cmd->add_option("--in", gap_in, "resonance CSV")->required();
    gap_cmd->add_option("--rep", gap_rep, "filter by irrep label");
    gap_cmd->add_option("--K", gap_K, "exclude |Im(s)| <= K");
    gap_cmd->add_option("--delta", gap_delta, "leading zero to exclude")->required();

    auto* selftest = app.add_subcommand("selftest", "run the built-in consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*info) {
            const SurfaceSpec spec = parse_surface(info_surface);
            const IfsScheme s = build_scheme(spec);
            std::cout << "surface: " << render_surface(spec) << "\n";
            std::cout << "symbols: " << s.n_symbols() << "\n";
            std::cout << "symmetry group order: " << s.symmetry().size() << "\n";
            for (int i = 0; i < s.n_symbols(); ++i)
                std::cout << "  D_" << i + 1 << ": center " << fmt_float(s.disks()[i].center)
                          << " radius " << fmt_float(s.disks()[i].radius) << "\n";
            if (const auto* sym = std::get_if<SymmetricFunnels>(&spec)) {
                std::cout << "offset: " << fmt_float(s.offset()) << "\n";
                std::cout << "funnel width: " << fmt_float(funnel_length(*sym)) << "\n";
            } else {
                std::cout << "solved a: " << fmt_float(s.bowen_series_a()) << "\n";
            }
            const auto report = validate_ifs(s);
            std::cout << "validation: " << (report.pass() ? "pass" : "FAIL") << "\n";
            for (const auto& f : report.failures) std::cout << "  " << f << "\n";
            return report.pass() ? 0 : kExitValidation;
        }

        if (*pfl) {
            std::cout << fmt_float(psi_for_length(pfl_nf, pfl_len)) << "\n";
            return 0;
        }

        if (*chart) {
            Group g = Group::trivial(1);
            if (chart_group == "klein")
                g = Group::klein_four();
            else if (chart_group == "z2")
                g = Group::z2_reflection();
            else if (chart_group.size() == 4 && chart_group.rfind("z2") == 2 &&
                     chart_group[0] == 'd')
                g = Group::dihedral_times_z2(chart_group[1] - '0');
            else
                throw UsageError("unknown group family " + chart_group);
            print_character_table(std::cout, g);
            if (!chart_csv.empty()) {
                std::ofstream f(chart_csv);
                write_character_table_csv(f, g);
            }
            return 0;
        }

        if (*orbits) {
            const IfsScheme s = orbit_args.scheme();
            const OrbitTable t = orbit_args.table(s);
            std::ofstream file;
            write_orbits_csv(open_out(file, orbits_out), t.group(), t.classes());
            if (!orbits_json.empty()) {
                std::ofstream jf(orbits_json);
                write_orbits_json(jf, t.group(), t.classes());
            }
            return 0;
        }

        if (*zeta) {
            const IfsScheme s = zeta_args.scheme();
            const OrbitTable t = zeta_args.table(s);
            const ZetaEvaluator z(t, zeta_rep, zeta_args.order);
            const Complex sv = parse_complex(zeta_s);
            const auto [val, deriv] = z.eval_with_derivative(sv);
            std::cout << "Z = " << fmt_float(val.real()) << " + " << fmt_float(val.imag())
                      << "i\n";
            std::cout << "dZ/ds = " << fmt_float(deriv.real()) << " + " << fmt_float(deriv.imag())
                      << "i\n";
            if (zeta_args.order >= 1) {
                const int idx =
                    zeta_rep == "all"
                        ? -1
                        : static_cast<int>(&t.group().irrep(zeta_rep) - t.group().irreps().data());
                std::cout << "R_n = " << fmt_float(relative_error(t, idx, zeta_args.order, sv))
                          << "\n";
            }
            return 0;
        }

        if (*res) {
            const IfsScheme s = res_args.scheme();
            const OrbitTable t = res_args.table(s);
            double r0, r1, i0, i1;
            char c1, c2, c3;
            std::istringstream rs(res_rect);
            if (!(rs >> r0 >> c1 >> r1 >> c2 >> i0 >> c3 >> i1))
                throw UsageError("--rect wants re0,re1,im0,im1");
            SearchRegion region{r0, r1, i0, i1, res_grid_re,
                                res_grid_im > 0 ? res_grid_im : default_grid_im(t)};
            std::vector<std::string> reps;
            if (res_reps == "all")
                for (const auto& irr : t.group().irreps()) reps.push_back(irr.label);
            else {
                std::istringstream ss(res_reps);
                std::string tok;
                while (std::getline(ss, tok, ',')) reps.push_back(tok);
            }
            ResonanceSet set;
            set.surface = res_args.surface;
            set.order = res_args.order;
            set.region = region;
            for (const auto& rep : reps) {
                const ZetaEvaluator z(t, rep, res_args.order);
                const int idx =
                    static_cast<int>(&t.group().irrep(rep) - t.group().irreps().data());
                const auto zeros = find_zeros(AnalyticFn::from(z), region, threads);
                // argument-principle cross-check over the whole rectangle
                int inside = 0;
                for (Complex zz : zeros)
                    if (zz.real() > region.re_min && zz.real() < region.re_max &&
                        zz.imag() > region.im_min && zz.imag() < region.im_max)
                        ++inside;
                try {
                    const int count = argument_count(AnalyticFn::from(z), region.re_min,
                                                     region.re_max, region.im_min, region.im_max);
                    if (count != inside)
                        std::cerr << "warning: argument count " << count << " != " << inside
                                  << " located zeros for " << rep << "\n";
                } catch (const ContourTooClose&) {
                    std::cerr << "warning: contour check skipped for " << rep
                              << " (zero too close to the boundary)\n";
                }
                for (Complex zz : zeros) {
                    Resonance r;
                    r.s = zz;
                    r.rep = rep;
                    r.order = res_args.order;
                    r.residual = std::abs(z.eval(zz));
                    r.trusted = relative_error(t, idx, res_args.order, zz) <= 1e-2;
                    set.members.push_back(r);
                }
            }
            set.sort_by_im();
            std::ofstream file;
            write_resonances_csv(open_out(file, res_out), set);
            if (!res_json.empty()) {
                std::ofstream jf(res_json);
                write_resonances_json(jf, set);
            }
            if (!res_svg.empty()) {
                std::ofstream sf(res_svg);
                write_resonances_svg(sf, set);
            }
            return 0;
        }

        if (*delta_cmd) {
            const IfsScheme s = delta_args.scheme();
            const OrbitTable t = delta_args.table(s);
            std::cout << fmt_float(critical_exponent(t, delta_args.order)) << "\n";
            return 0;
        }

        if (*escan) {
            const IfsScheme s = escan_args.scheme();
            const OrbitTable t = escan_args.table(s);
            std::ofstream file;
            std::ostream& os = open_out(file, escan_out);
            os << "x,R_n\n";
            for (int i = 0; i < escan_count; ++i) {
                const double x =
                    escan_re0 + (escan_re1 - escan_re0) * i / std::max(1, escan_count - 1);
                os << fmt_float(x) << ','
                   << fmt_float(relative_error(t, -1, escan_args.order, {x, escan_im})) << '\n';
            }
            return 0;
        }

        if (*env) {
            std::ifstream in(env_in);
            if (!in) throw Error("cannot read " + env_in);
            const ResonanceSet set = read_resonances_csv(in);
            const auto samples = envelope(set, env_rep, env_window, env_tmin, env_tmax, env_tstep);
            std::ofstream file;
            write_envelope_csv(open_out(file, env_out), samples, env_rep.empty() ? "all" : env_rep);
            return 0;
        }

        if (*gap_cmd) {
            std::ifstream in(gap_in);
            if (!in) throw Error("cannot read " + gap_in);
            const ResonanceSet set = read_resonances_csv(in);
            std::cout << fmt_float(gap(set, gap_rep, gap_K, gap_delta)) << "\n";
            return 0;
        }

        if (*selftest) return run_selftest();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationFailed& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidPsi& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NoSuchSurface& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
