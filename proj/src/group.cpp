#include "szeta/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace szeta {

namespace {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    return p;
}

Perm compose(const Perm& p, const Perm& q) { // (p*q)(x) = p(q(x))
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i] - 1];
    return r;
}

Perm perm_pow(const Perm& p, int k) {
    Perm r = identity_perm(static_cast<int>(p.size()));
    for (int i = 0; i < k; ++i) r = compose(p, r);
    return r;
}

// Generators of D_{n_f} x Z2 as permutations of the 2 n_f flow-adapted symbols:
// g1 rotates each copy, g2 reflects within each copy, g3 exchanges the copies.
Perm gen_rotation(int nf) {
    Perm p(2 * nf);
    for (int i = 1; i <= nf; ++i) p[i - 1] = i % nf + 1;
    for (int i = nf + 1; i <= 2 * nf; ++i) p[i - 1] = (i - nf) % nf + 1 + nf;
    return p;
}
Perm gen_reflection(int nf) {
    Perm p(2 * nf);
    for (int j = 1; j <= nf; ++j) {
        p[j - 1] = nf + 1 - j;
        p[nf + j - 1] = 2 * nf + 1 - j;
    }
    return p;
}
Perm gen_swap(int nf) {
    Perm p(2 * nf);
    for (int j = 1; j <= nf; ++j) {
        p[j - 1] = j + nf;
        p[nf + j - 1] = j;
    }
    return p;
}

// Closed-form character value for an element in (rot, refl, swap) normal form.
double char_value_abc(const Irrep& irr, const std::array<int, 3>& abc, int nf) {
    const int a = abc[0], b = abc[1], c = abc[2];
    auto ipow = [](int s, int k) { return (k % 2 == 0) ? 1 : s; };
    if (irr.two_dim_k == 0) {
        const int ua = (a % 2 == 0) ? 1 : irr.sign_rot;
        return ua * ipow(irr.sign_refl, b) * ipow(irr.sign_swap, c);
    }
    if (b != 0) return 0.0;
    double v = 2.0 * std::cos(2.0 * std::numbers::pi * irr.two_dim_k * a / nf);
    const double r = std::round(v);
    if (std::abs(v - r) < 1e-9) v = r; // integral for nf in {3,4,6}
    return v * ipow(irr.sign_swap, c);
}

std::string roman(int k) {
    static const char* numerals[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
    return numerals[k - 1];
}

} // namespace

void Group::finish() {
    const int n = size();
    mult_.assign(n * n, -1);
    inv_.assign(n, -1);
    order_.assign(n, 0);
    // multiplication by permutation composition and lookup
    auto find = [&](const Perm& p) {
        for (int i = 0; i < n; ++i)
            if (perms_[i] == p) return i;
        throw GroupMismatch("Group: product permutation not in element list");
    };
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            mult_[g * n + h] = find(compose(perms_[g], perms_[h]));
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (mult_[g * n + h] == 0) { inv_[g] = h; break; }
        int p = g, k = 1;
        while (p != 0) { p = mult_[p * n + g]; ++k; }
        order_[g] = (g == 0) ? 1 : k;
    }
    // conjugacy classes
    class_of_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (class_of_[g] >= 0) continue;
        const int cid = static_cast<int>(class_reps_.size());
        class_reps_.push_back(g);
        int sz = 0;
        for (int h = 0; h < n; ++h) {
            const int conj = mult_[mult_[h * n + g] * n + inv_[h]];
            if (class_of_[conj] < 0) { class_of_[conj] = cid; ++sz; }
        }
        class_sizes_.push_back(sz);
    }
}

Group Group::dihedral_times_z2(int nf) {
    if (nf < 3) throw ContextMismatch("dihedral_times_z2: need n_f >= 3");
    Group g;
    g.family_ = GroupFamily::DihedralTimesZ2;
    g.n_f_ = nf;
    g.n_symbols_ = 2 * nf;
    const Perm g1 = gen_rotation(nf), g2 = gen_reflection(nf), g3 = gen_swap(nf);
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                Perm p = perm_pow(g1, a);
                if (b) p = compose(p, g2);
                if (c) p = compose(p, g3);
                g.perms_.push_back(p);
                g.abc_.push_back({a, b, c});
                g.refl_bit_.push_back(b);
            }
    // irrep list in the paper's table order
    if (nf % 2 == 1) {
        for (int i = 0; i < 4; ++i) {
            Irrep r;
            r.label = roman(i / 2 + 1) + std::string("_") + std::to_string(i % 2 + 1);
            r.sign_refl = (i < 2) ? 1 : -1;
            r.sign_swap = (i % 2 == 0) ? 1 : -1;
            g.irreps_.push_back(r);
        }
        for (int k = 1; k <= (nf - 1) / 2; ++k)
            for (int t = 0; t < 2; ++t) {
                Irrep r;
                r.label = roman(2 + k) + std::string("_") + std::to_string(t + 1);
                r.dim = 2;
                r.two_dim_k = k;
                r.sign_swap = (t == 0) ? -1 : 1; // III_1 carries the swap sign -1
                g.irreps_.push_back(r);
            }
    } else {
        const int urefl[4][2] = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}}; // (u,v) per roman block
        for (int i = 0; i < 8; ++i) {
            Irrep r;
            r.label = roman(i / 2 + 1) + std::string("_") + std::to_string(i % 2 + 1);
            r.sign_rot = urefl[i / 2][0];
            r.sign_refl = urefl[i / 2][1];
            r.sign_swap = (i % 2 == 0) ? 1 : -1;
            g.irreps_.push_back(r);
        }
        for (int k = 1; k <= nf / 2 - 1; ++k)
            for (int t = 0; t < 2; ++t) {
                Irrep r;
                r.label = roman(4 + k) + std::string("_") + std::to_string(t + 1);
                r.dim = 2;
                r.two_dim_k = k;
                r.sign_swap = (t == 0) ? 1 : -1; // V_1 is swap-even for D_4 x Z2
                g.irreps_.push_back(r);
            }
    }
    g.finish();
    return g;
}

Group Group::klein_four() {
    Group g;
    g.family_ = GroupFamily::KleinFour;
    g.n_symbols_ = 4;
    const Perm e = identity_perm(4);
    const Perm s1 = {3, 4, 1, 2}; // sigma_1: (1,3)(2,4)
    const Perm s2 = {2, 1, 4, 3}; // sigma_2: (1,2)(3,4)
    g.perms_ = {e, s1, s2, compose(s1, s2)};
    g.abc_ = {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}};
    g.refl_bit_ = {0, 1, 0, 1};
    const char* labels[] = {"A", "B", "C", "D"};
    const int signs[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}; // (chi(s1), chi(s2))
    for (int i = 0; i < 4; ++i) {
        Irrep r;
        r.label = labels[i];
        r.sign_refl = signs[i][0];
        r.sign_swap = signs[i][1];
        g.irreps_.push_back(r);
    }
    g.finish();
    return g;
}

Group Group::z2_reflection() {
    Group g;
    g.family_ = GroupFamily::Z2;
    g.n_symbols_ = 4;
    g.perms_ = {identity_perm(4), {3, 4, 1, 2}};
    g.abc_ = {{0, 0, 0}, {0, 1, 0}};
    g.refl_bit_ = {0, 1};
    Irrep a;
    a.label = "A";
    Irrep b;
    b.label = "B";
    b.sign_refl = -1;
    g.irreps_ = {a, b};
    g.finish();
    return g;
}

Group Group::trivial(int n_symbols) {
    Group g;
    g.family_ = GroupFamily::Trivial;
    g.n_symbols_ = n_symbols;
    g.perms_ = {identity_perm(n_symbols)};
    g.abc_ = {{0, 0, 0}};
    g.refl_bit_ = {0};
    Irrep r;
    r.label = "triv";
    g.irreps_ = {r};
    g.finish();
    return g;
}

int Group::multiply(int g, int h) const {
    if (g < 0 || h < 0 || g >= size() || h >= size())
        throw GroupMismatch("multiply: element index out of range");
    return mult_[g * size() + h];
}

int Group::inverse(int g) const { return inv_.at(g); }

int Group::power(int g, int k) const {
    const int n = order_[g];
    k %= n;
    if (k < 0) k += n;
    int r = 0;
    for (int i = 0; i < k; ++i) r = multiply(r, g);
    return r;
}

int Group::order(int g) const { return order_.at(g); }

const Irrep& Group::irrep(const std::string& label) const {
    for (const auto& r : irreps_)
        if (r.label == label) return r;
    throw UnknownIrrep("no irrep labeled '" + label + "'");
}

double Group::character_value(const Irrep& irr, int g) const {
    return char_value_abc(irr, abc_.at(g), n_f_ == 0 ? 1 : n_f_);
}

double Group::character_value(int irrep_index, int g) const {
    return character_value(irreps_.at(irrep_index), g);
}

int Group::closing_element(int start_circle, int start_orient,
                           int end_circle, int end_orient) const {
    if (family_ != GroupFamily::DihedralTimesZ2)
        throw ContextMismatch("closing_element: needs the D_{n_f} x Z2 action");
    const bool preserve = start_orient == end_orient;
    int found = -1;
    for (int g = 0; g < size(); ++g) {
        if (apply(g, end_circle) == start_circle && orientation_preserving(g) == preserve) {
            if (found >= 0) throw GroupMismatch("closing_element: not unique");
            found = g;
        }
    }
    if (found < 0) throw GroupMismatch("closing_element: none found");
    return found;
}

int Group::element_from_perm(const Perm& p) const {
    for (int g = 0; g < size(); ++g)
        if (perms_[g] == p) return g;
    throw GroupMismatch("element_from_perm: permutation not in group");
}

std::string Group::element_name(int g) const {
    const auto& abc = abc_.at(g);
    std::ostringstream os;
    os << "r" << abc[0] << (abc[1] ? "f" : "") << (abc[2] ? "s" : "");
    return os.str();
}

std::string Group::cycle_notation(int g) const {
    const Perm& p = perms_.at(g);
    const int n = n_symbols_;
    std::vector<bool> seen(n, false);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || p[i] == i + 1) { seen[i] = true; continue; }
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : ",") << (j + 1);
            first = false;
            j = p[j] - 1;
        }
        os << ")";
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

} // namespace szeta
