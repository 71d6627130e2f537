#include "szeta/cycle.hpp"

#include <algorithm>
#include <cmath>

namespace szeta {

namespace {

// exp(z) that saturates instead of raising FE for wild Newton excursions
Complex cexp(Complex z) {
    if (z.real() > 700.0) return Complex(std::numeric_limits<double>::infinity(), 0.0);
    if (z.real() < -746.0) return Complex(0.0, 0.0);
    return std::exp(z);
}

} // namespace

OrbitTable OrbitTable::build(const IfsScheme& scheme, const Group& group, int max_order,
                             Enumerator enumerator) {
    if (group.size() > 1 && !check_free_action(scheme, group, std::min(max_order, 4)))
        throw NotFree("OrbitTable::build: group does not act freely on the G-closed words");
    OrbitTable t;
    t.group_ = group;
    t.max_order_ = max_order;
    const bool reduced_ok =
        scheme.kind() == SchemeKind::FlowAdapted && group.family() == GroupFamily::DihedralTimesZ2;
    const Enumerator pick = (enumerator == Enumerator::Auto)
                                ? (reduced_ok ? Enumerator::Reduced : Enumerator::BruteForce)
                                : enumerator;
    t.classes_ = (pick == Enumerator::Reduced)
                     ? enumerate_prime_classes_reduced(scheme, group, max_order)
                     : enumerate_prime_classes_bruteforce(scheme, group, max_order);
    const int n_irreps = static_cast<int>(group.irreps().size());
    for (const auto& cls : t.classes_) {
        Row row;
        row.n_w = cls.n_w;
        row.m_w = cls.m_w;
        row.length_L = cls.length_L;
        row.base_length = cls.length_L / cls.m_w;
        row.g = cls.canonical.g;
        const int lmax = max_order / cls.n_w;
        row.chars.resize(n_irreps);
        for (int i = 0; i < n_irreps; ++i) {
            row.chars[i].resize(lmax);
            for (int l = 1; l <= lmax; ++l)
                row.chars[i][l - 1] = group.character_value(i, group.power(row.g, l));
        }
        t.rows_.push_back(std::move(row));
    }
    return t;
}

double OrbitTable::longest_length() const {
    double L = 0;
    for (const auto& r : rows_) L = std::max(L, r.length_L);
    return L;
}

Complex term_T(const OrbitTable& table, const OrbitTable::Row& row, int l, int irrep_index,
               Complex s) {
    const double chi = row.chars.at(irrep_index).at(l - 1);
    if (chi == 0.0) return {};
    const int d = table.group().irreps()[irrep_index].dim;
    const double x = row.base_length; // phi'^{1/m} = e^{-x}, x > 0
    const Complex numer = cexp(-s * double(l) * x);
    const double denom = -std::expm1(-double(l) * x); // 1 - e^{-l x}
    return (double(d) / l) * chi * numer / denom;
}

Complex coeff_a(const OrbitTable& table, int irrep_index, int t, Complex s) {
    Complex sum{};
    for (const auto& row : table.rows())
        if (t % row.n_w == 0 && t / row.n_w >= 1 && t <= table.max_order())
            sum += term_T(table, row, t / row.n_w, irrep_index, s);
    return -sum;
}

Complex recurrence_B(const std::vector<Complex>& a, int N, int r) {
    if (r < 1 || r > N) throw Error("recurrence_B: need 1 <= r <= N");
    // dense (N, r) triangle, memoized bottom-up
    std::vector<std::vector<Complex>> B(N + 1, std::vector<Complex>(r + 1));
    for (int n = 1; n <= N; ++n) B[n][1] = a.at(n);
    for (int rr = 2; rr <= r; ++rr)
        for (int n = rr; n <= N; ++n) {
            Complex acc{};
            for (int t = 1; t <= n - rr + 1; ++t) acc += B[n - t][rr - 1] * a.at(t);
            B[n][rr] = acc / double(rr);
        }
    return B[N][r];
}

ZetaEvaluator::ZetaEvaluator(const OrbitTable& table, int irrep_index, int order)
    : table_(&table), irrep_(irrep_index), order_(order) {
    if (order < 0 || order > table.max_order())
        throw OrderTooHigh("ZetaEvaluator: order exceeds the table's max_order");
    if (irrep_index >= static_cast<int>(table.group().irreps().size()))
        throw UnknownIrrep("ZetaEvaluator: irrep index out of range");
}

ZetaEvaluator::ZetaEvaluator(const OrbitTable& table, const std::string& label, int order)
    : ZetaEvaluator(table,
                    label == "all" ? -1
                                   : static_cast<int>(&table.group().irrep(label) -
                                                      table.group().irreps().data()),
                    order) {}

std::string ZetaEvaluator::rep_label() const {
    return irrep_ < 0 ? "all" : table_->group().irreps()[irrep_].label;
}

namespace {

// single-irrep truncated zeta with optional derivative propagation
void eval_one(const OrbitTable& table, int irrep, int order, Complex s, Complex& Z, Complex* dZ) {
    std::vector<Complex> a(order + 1), da(order + 1);
    for (int t = 1; t <= order; ++t) {
        Complex at{}, dat{};
        for (const auto& row : table.rows()) {
            if (t % row.n_w != 0) continue;
            const int l = t / row.n_w;
            const Complex T = term_T(table, row, l, irrep, s);
            at -= T;
            if (dZ) dat -= -double(l) * row.base_length * T; // dT/ds = -(l L / m) T
        }
        a[t] = at;
        da[t] = dat;
    }
    // B triangle with derivative
    std::vector<std::vector<Complex>> B(order + 1, std::vector<Complex>(order + 1));
    std::vector<std::vector<Complex>> dB;
    if (dZ) dB.assign(order + 1, std::vector<Complex>(order + 1));
    for (int n = 1; n <= order; ++n) {
        B[n][1] = a[n];
        if (dZ) dB[n][1] = da[n];
    }
    for (int r = 2; r <= order; ++r)
        for (int n = r; n <= order; ++n) {
            Complex acc{}, dacc{};
            for (int t = 1; t <= n - r + 1; ++t) {
                acc += B[n - t][r - 1] * a[t];
                if (dZ) dacc += dB[n - t][r - 1] * a[t] + B[n - t][r - 1] * da[t];
            }
            B[n][r] = acc / double(r);
            if (dZ) dB[n][r] = dacc / double(r);
        }
    Z = 1.0;
    Complex dsum{};
    for (int n = 1; n <= order; ++n)
        for (int r = 1; r <= n; ++r) {
            Z += B[n][r];
            if (dZ) dsum += dB[n][r];
        }
    if (dZ) *dZ = dsum;
}

} // namespace

Complex ZetaEvaluator::eval(Complex s) const {
    Complex Z;
    if (irrep_ >= 0) {
        eval_one(*table_, irrep_, order_, s, Z, nullptr);
        return Z;
    }
    Complex P = 1.0;
    for (size_t i = 0; i < table_->group().irreps().size(); ++i) {
        eval_one(*table_, static_cast<int>(i), order_, s, Z, nullptr);
        P *= Z;
    }
    return P;
}

std::pair<Complex, Complex> ZetaEvaluator::eval_with_derivative(Complex s) const {
    if (irrep_ >= 0) {
        Complex Z, dZ;
        eval_one(*table_, irrep_, order_, s, Z, &dZ);
        return {Z, dZ};
    }
    // product rule across the factors
    const size_t k = table_->group().irreps().size();
    std::vector<Complex> Zs(k), dZs(k);
    for (size_t i = 0; i < k; ++i) eval_one(*table_, static_cast<int>(i), order_, s, Zs[i], &dZs[i]);
    Complex P = 1.0, dP{};
    for (size_t i = 0; i < k; ++i) {
        dP = dP * Zs[i] + P * dZs[i];
        P *= Zs[i];
    }
    return {P, dP};
}

Complex euler_product_oracle(const OrbitTable& trivial_table, Complex s, double length_cutoff) {
    if (trivial_table.group().size() != 1)
        throw ContextMismatch("euler_product_oracle: needs a trivial-group table");
    if (!(s.real() > 1.0))
        throw NotConvergent("euler_product_oracle: requires Re(s) > 1");
    Complex P = 1.0;
    for (const auto& row : trivial_table.rows()) {
        const double L = row.length_L;
        if (L > length_cutoff) continue;
        for (int k = 0;; ++k) {
            if ((s.real() + k) * L > 41.5) break; // e^{-41.5} < 1e-18
            P *= 1.0 - cexp(-(s + double(k)) * L);
        }
    }
    return P;
}

double relative_error(const OrbitTable& table, int irrep_index, int n, Complex s) {
    if (n < 1) throw Error("relative_error: n >= 1");
    const ZetaEvaluator zn(table, irrep_index, n);
    const ZetaEvaluator zn1(table, irrep_index, n - 1);
    const Complex Zn = zn.eval(s);
    if (std::abs(Zn) < 1e-300)
        throw DegenerateDenominator("relative_error: |Z^{(n)}(s)| below 1e-300");
    return std::abs(zn1.eval(s) - Zn) / std::abs(Zn);
}

} // namespace szeta
