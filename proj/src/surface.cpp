#include "szeta/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace szeta {

namespace {
constexpr double kPi = std::numbers::pi;

Complex cayley_inverse(Complex w) { return (Complex(0, 1) - w) / (w + Complex(0, 1)); }
} // namespace

SurfaceSpec parse_surface(const std::string& text) {
    if (text.rfind("sym:", 0) == 0) {
        const auto rest = text.substr(4);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw UsageError("surface spec: expected sym:<nf>:<psi>");
        SymmetricFunnels s;
        s.n_f = std::stoi(rest.substr(0, colon));
        s.psi = std::stod(rest.substr(colon + 1));
        return s;
    }
    if (text.rfind("bs:", 0) == 0) {
        ThreeFunnel t;
        char comma1 = 0, comma2 = 0;
        std::istringstream is(text.substr(3));
        if (!(is >> t.l1 >> comma1 >> t.l2 >> comma2 >> t.l3) || comma1 != ',' || comma2 != ',')
            throw UsageError("surface spec: expected bs:<l1>,<l2>,<l3>");
        return t;
    }
    throw UsageError("surface spec must start with 'sym:' or 'bs:'");
}

std::string render_surface(const SurfaceSpec& spec) {
    std::ostringstream os;
    if (const auto* s = std::get_if<SymmetricFunnels>(&spec))
        os << "sym:" << s->n_f << ":" << s->psi;
    else {
        const auto& t = std::get<ThreeFunnel>(spec);
        os << "bs:" << t.l1 << "," << t.l2 << "," << t.l3;
    }
    return os.str();
}

Complex EdgeMap::apply(Complex u) const {
    return mobius_apply(m, u - pre_offset) + post_offset;
}

Disk EdgeMap::image(const Disk& d) const {
    const Disk shifted{d.center - pre_offset, d.radius};
    Disk img = mobius_image_disk(m, shifted);
    img.center += post_offset;
    return img;
}

bool IfsScheme::adjacent(int i, int j) const {
    const int n = n_symbols();
    if (i < 1 || j < 1 || i > n || j > n) return false;
    return adj_[(i - 1) * n + (j - 1)] != 0;
}

EdgeMap IfsScheme::edge_map(int i, int j) const {
    if (!adjacent(i, j))
        throw InvalidTransition("edge_map: no transition " + std::to_string(i) + " -> " +
                                std::to_string(j));
    EdgeMap e;
    if (kind_ == SchemeKind::FlowAdapted) {
        if (i <= n_f_) { // j > n_f: u -> R_{j-n_f}(u) + delta
            e.m = base_[j - n_f_ - 1];
            e.post_offset = offset_;
        } else { // j <= n_f: u -> R_j(u - delta)
            e.m = base_[j - 1];
            e.pre_offset = offset_;
        }
    } else {
        e.m = base_[(j - 1 + 2) % 4]; // map into D_j is S_j^{-1} = S_{j+2}
    }
    return e;
}

Group IfsScheme::group_for(GroupChoice choice) const {
    switch (choice) {
        case GroupChoice::Trivial:
            return Group::trivial(n_symbols());
        case GroupChoice::Klein:
            if (kind_ != SchemeKind::BowenSeries || symmetry_->family() != GroupFamily::KleinFour)
                throw ContextMismatch("Klein group only available for l1 = l2 Bowen-Series schemes");
            return *symmetry_;
        case GroupChoice::Full:
            return *symmetry_;
    }
    throw ContextMismatch("unknown group choice");
}

Complex IfsScheme::point_action(const Group& g, int elem, int symbol, Complex u) const {
    if (g.n_symbols() != n_symbols())
        throw ContextMismatch("point_action: group acts on a different symbol set");
    if (kind_ == SchemeKind::BowenSeries) {
        // sigma_1: u -> -u;  sigma_2: u -> a/u. Both are global Moebius maps.
        const auto& p = g.symbol_permutation(elem);
        const bool s1 = p[0] == 3 || p[0] == 4; // involves the (1,3)(2,4) factor
        const bool s2 = p[0] == 2 || p[0] == 4;
        Complex v = u;
        if (s2) v = bs_a_ / v;
        if (s1) v = -v;
        return v;
    }
    // Flow-adapted: apply the (rot, refl, swap) decomposition right-to-left,
    // tracking which copy the point currently sits in.
    const Perm& perm = g.symbol_permutation(elem);
    const auto& abc = g.normal_form(elem);
    const int a = abc[0];
    const bool has_f = abc[1] != 0;
    const bool has_s = abc[2] != 0;

    int sym = symbol;
    Complex v = u;
    auto in_second = [&](int s) { return s > n_f_; };
    if (has_s) { // g3: +-delta
        v += in_second(sym) ? -offset_ : offset_;
        sym = in_second(sym) ? sym - n_f_ : sym + n_f_;
    }
    if (has_f) { // g2: u -> -u on copy one, 2 delta - u on copy two
        v = in_second(sym) ? 2.0 * offset_ - v : -v;
        sym = in_second(sym) ? n_f_ + (n_f_ + 1 - (sym - n_f_)) : n_f_ + 1 - sym;
    }
    for (int k = 0; k < a; ++k) { // g1: conjugated rotation
        const Complex rot = std::polar(1.0, 2.0 * kPi / n_f_);
        if (in_second(sym)) {
            v = offset_ + cayley(rot * cayley_inverse(v - offset_));
            sym = (sym - n_f_) % n_f_ + 1 + n_f_;
        } else {
            v = cayley(rot * cayley_inverse(v));
            sym = sym % n_f_ + 1;
        }
    }
    if (sym != perm[symbol - 1])
        throw ContextMismatch("point_action: symbol bookkeeping out of sync");
    return v;
}

IfsScheme build_flow_adapted(const SymmetricFunnels& spec) {
    const int nf = spec.n_f;
    if (nf < 3) throw InvalidPsi("build_flow_adapted: n_f must be >= 3");
    if (!(spec.psi > 0.0 && spec.psi < 2.0 * kPi / nf))
        throw InvalidPsi("build_flow_adapted: psi outside (0, 2 pi / n_f)");

    IfsScheme s;
    s.kind_ = SchemeKind::FlowAdapted;
    s.n_f_ = nf;
    s.spec_ = spec;

    std::vector<double> a(nf), b(nf);
    for (int j = 1; j <= nf; ++j) {
        const double mid = kPi * (2 * j - 1) / nf - kPi;
        // Cayley image of e^{i theta} is tan(theta / 2)
        a[j - 1] = std::tan(0.5 * (mid - spec.psi / 2));
        b[j - 1] = std::tan(0.5 * (mid + spec.psi / 2));
    }
    s.offset_ = b[nf - 1] - a[0] + 1.0;
    s.disks_.resize(2 * nf);
    s.base_.resize(nf);
    for (int j = 0; j < nf; ++j) {
        const double m = 0.5 * (b[j] + a[j]);
        const double r = 0.5 * (b[j] - a[j]);
        s.disks_[j] = Disk{m, r};
        s.disks_[nf + j] = Disk{m + s.offset_, r};
        s.base_[j] = Matrix2{m / r, (r * r - m * m) / r, 1.0 / r, -m / r};
    }
    const int N = 2 * nf;
    s.adj_.assign(N * N, 0);
    for (int i = 1; i <= nf; ++i)
        for (int j = 1; j <= nf; ++j)
            if (i != j) {
                s.adj_[(i - 1) * N + (nf + j - 1)] = 1;
                s.adj_[(nf + j - 1) * N + (i - 1)] = 1;
            }
    s.symmetry_ = std::make_shared<Group>(Group::dihedral_times_z2(nf));

    const auto report = validate_ifs(s);
    if (!report.pass())
        throw ValidationFailed("build_flow_adapted: " + report.failures.front());
    return s;
}

IfsScheme build_bowen_series(const ThreeFunnel& spec) {
    if (!(spec.l1 > 0 && spec.l2 > 0 && spec.l3 > 0))
        throw NoSuchSurface("build_bowen_series: lengths must be positive");
    const double c1 = std::cosh(spec.l1 / 2), s1 = std::sinh(spec.l1 / 2);
    const double c2 = std::cosh(spec.l2 / 2), s2 = std::sinh(spec.l2 / 2);
    const double c3 = std::cosh(spec.l3 / 2);

    // Solve Tr(S1 S2^{-1}) = -2 cosh(l3/2) for a >= 1:
    //   f(a) = 2 c1 c2 + 2 c3 - s1 s2 (a + 1/a), strictly decreasing in log a on [1, inf).
    auto f = [&](double a) { return 2 * c1 * c2 + 2 * c3 - s1 * s2 * (a + 1.0 / a); };
    double lo = 0.0, hi = std::log(1e8); // log a
    if (f(std::exp(lo)) < 0.0 || f(std::exp(hi)) > 0.0)
        throw NoSuchSurface(
            "build_bowen_series: trace condition has no solution with a in [1, 1e8] "
            "(no sign change over the solver bracket)");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(std::exp(mid)) > 0.0 ? lo : hi) = mid;
    }
    const double a = std::exp(0.5 * (lo + hi));

    IfsScheme s;
    s.kind_ = SchemeKind::BowenSeries;
    s.spec_ = spec;
    s.bs_a_ = a;
    const Matrix2 S1{c1, s1, s1, c1};
    const Matrix2 S2{c2, a * s2, s2 / a, c2};
    s.base_ = {S1, S2, S1.inverse(), S2.inverse()};
    // isometric disks of the four generators
    s.disks_ = {Disk{-c1 / s1, 1.0 / s1}, Disk{-a * c2 / s2, a / s2},
                Disk{c1 / s1, 1.0 / s1}, Disk{a * c2 / s2, a / s2}};
    s.adj_.assign(16, 0);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if (std::abs(i - j) != 2) s.adj_[(i - 1) * 4 + (j - 1)] = 1;
    const bool symmetric = std::abs(spec.l1 - spec.l2) <= 1e-12 * std::max(spec.l1, spec.l2);
    s.symmetry_ = std::make_shared<Group>(symmetric ? Group::klein_four() : Group::z2_reflection());

    const auto report = validate_ifs(s);
    if (!report.pass())
        throw ValidationFailed("build_bowen_series: " + report.failures.front());
    return s;
}

IfsScheme build_scheme(const SurfaceSpec& spec) {
    if (const auto* s = std::get_if<SymmetricFunnels>(&spec)) return build_flow_adapted(*s);
    return build_bowen_series(std::get<ThreeFunnel>(spec));
}

ValidationReport validate_ifs(const IfsScheme& s) {
    ValidationReport rep;
    const int n = s.n_symbols();
    const auto& disks = s.disks();
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        rep.failures.push_back(msg);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(disks[i].center - disks[j].center) <= disks[i].radius + disks[j].radius)
                fail(rep.disks_disjoint, "disk closures " + std::to_string(i + 1) + " and " +
                                             std::to_string(j + 1) + " intersect");
    struct Image {
        int i, j;
        Disk d;
    };
    std::vector<Image> images;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!s.adjacent(i, j)) continue;
            Disk img;
            try {
                img = s.edge_map(i, j).image(disks[i - 1]);
            } catch (const Error& e) {
                fail(rep.images_nested, "edge " + std::to_string(i) + "->" + std::to_string(j) +
                                            ": " + e.what());
                continue;
            }
            const Disk& target = disks[j - 1];
            if (!(std::abs(img.center - target.center) + img.radius < target.radius))
                fail(rep.images_nested, "image of edge " + std::to_string(i) + "->" +
                                            std::to_string(j) + " not strictly inside D_j");
            images.push_back({i, j, img});
        }
    for (size_t p = 0; p < images.size(); ++p)
        for (size_t q = p + 1; q < images.size(); ++q) {
            const auto& A = images[p].d;
            const auto& B = images[q].d;
            if (std::abs(A.center - B.center) <= A.radius + B.radius)
                fail(rep.images_disjoint,
                     "images of edges " + std::to_string(images[p].i) + "->" +
                         std::to_string(images[p].j) + " and " + std::to_string(images[q].i) +
                         "->" + std::to_string(images[q].j) + " intersect");
        }
    return rep;
}

ScaledMatrix closed_word_matrix(const IfsScheme& s, const std::vector<int>& word) {
    const int n = static_cast<int>(word.size()) - 1;
    if (n < 1 || word.front() != word.back())
        throw NotClosed("closed_word_matrix: word must be closed (w_0 = w_n)");
    for (int k = 0; k < n; ++k)
        if (!s.adjacent(word[k], word[k + 1]))
            throw InvalidTransition("closed_word_matrix: invalid transition at position " +
                                    std::to_string(k));
    std::vector<Matrix2> factors;
    factors.reserve(n);
    if (s.kind() == SchemeKind::FlowAdapted) {
        // T(w): alternating product of reflections, left factor first.
        const int nf = s.n_f();
        if (n % 2 != 0)
            throw NotClosed("closed_word_matrix: flow-adapted closed words have even length");
        if (word[0] <= nf) {
            for (int k = n; k >= 1; --k)
                factors.push_back(s.base_matrices()[(k % 2 == 0 ? word[k] : word[k] - nf) - 1]);
        } else {
            for (int k = n - 1; k >= 0; --k)
                factors.push_back(s.base_matrices()[(k % 2 == 1 ? word[k] : word[k] - nf) - 1]);
        }
    } else {
        // phi_w = S_{w_n}^{-1} o ... o S_{w_1}^{-1}
        for (int k = n; k >= 1; --k)
            factors.push_back(s.base_matrices()[(word[k] - 1 + 2) % 4]);
    }
    return product_scaled(factors);
}

double funnel_length(const SymmetricFunnels& spec) {
    const IfsScheme s = build_flow_adapted(spec);
    const Group& g = s.symmetry();
    const int nf = spec.n_f;
    // reduced word (-1): one step, orientation flipped; end circle n_f + 2.
    const int end = nf + 2;
    const int close = g.closing_element(1, +1, end, -1);
    const int m = g.order(close); // = 2 for a reflection
    std::vector<int> w{1, end};
    // iterate to the closed word w^m
    std::vector<int> wm;
    for (int j = m - 1; j >= 0; --j) {
        const int gj = g.power(close, j);
        if (j == m - 1) wm.push_back(g.apply(gj, w[0]));
        wm.push_back(g.apply(gj, w[1]));
    }
    return displacement_length(closed_word_matrix(s, wm));
}

double psi_for_length(int n_f, double target) {
    const double lo_psi = 1e-6;
    const double hi_psi = 2.0 * kPi / n_f - 1e-6;
    // sampled monotonicity scan before trusting bisection
    const int kSamples = 24;
    double prev = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
        const double psi = lo_psi + (hi_psi - lo_psi) * i / kSamples;
        const double len = funnel_length({n_f, psi});
        if (i > 0 && !(len < prev))
            throw NotMonotone("psi_for_length: funnel length not decreasing in psi");
        prev = len;
    }
    double flo = funnel_length({n_f, lo_psi});
    double fhi = funnel_length({n_f, hi_psi});
    if (!(target <= flo && target >= fhi))
        throw OutOfRange("psi_for_length: target length " + std::to_string(target) +
                         " outside achievable range [" + std::to_string(fhi) + ", " +
                         std::to_string(flo) + "]");
    double lo = lo_psi, hi = hi_psi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double len = funnel_length({n_f, mid});
        if (std::abs(len - target) < 1e-9) return mid;
        (len > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace szeta
