#pragma once

#include <complex>
#include <string>
#include <vector>

#include "szeta/group.hpp"
#include "szeta/surface.hpp"
#include "szeta/words.hpp"

namespace szeta {

enum class Enumerator { Auto, BruteForce, Reduced };

/// Everything the truncated zeta functions consume: one row per prime class
/// with its word length, closing-element order, geodesic length, and the
/// character values chi(g^l) for every irrep and every power l <= max/n_w.
class OrbitTable {
  public:
    struct Row {
        int n_w = 0;
        int m_w = 1;
        double length_L = 0;          // geodesic length of w^{m_w}
        double base_length = 0;       // length_L / m_w; phi' = exp(-base_length)
        int g = 0;
        std::vector<std::vector<double>> chars; // [irrep][l-1], l = 1..max_order/n_w
    };

    static OrbitTable build(const IfsScheme& scheme, const Group& group, int max_order,
                            Enumerator enumerator = Enumerator::Auto);

    const Group& group() const { return group_; }
    int max_order() const { return max_order_; }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<PrimeClassDatum>& classes() const { return classes_; }
    double longest_length() const;

  private:
    Group group_ = Group::trivial(1);
    int max_order_ = 0;
    std::vector<Row> rows_;
    std::vector<PrimeClassDatum> classes_;
};

/// Truncated symmetry-reduced zeta function Z^{chi,(n)}(s), evaluable anywhere
/// in the s-plane, with its exact analytic derivative. irrep_index = -1 means
/// the full product over all irreps of the table's group.
class ZetaEvaluator {
  public:
    ZetaEvaluator(const OrbitTable& table, int irrep_index, int order);
    ZetaEvaluator(const OrbitTable& table, const std::string& irrep_label, int order);

    Complex operator()(Complex s) const { return eval(s); }
    Complex eval(Complex s) const;
    std::pair<Complex, Complex> eval_with_derivative(Complex s) const;

    int order() const { return order_; }
    const OrbitTable& table() const { return *table_; }
    std::string rep_label() const;

  private:
    const OrbitTable* table_;
    int irrep_ = -1;
    int order_ = 0;
};

/// T^{chi}_{[w],l}(s) for one table row.
Complex term_T(const OrbitTable& table, const OrbitTable::Row& row, int l, int irrep_index,
               Complex s);

/// a^{chi}_t(s) = -sum over (class, l) with n_w * l = t.
Complex coeff_a(const OrbitTable& table, int irrep_index, int t, Complex s);

/// B_{N,r} recurrence over a coefficient array a[1..N_max] (a[0] unused).
Complex recurrence_B(const std::vector<Complex>& a, int N, int r);

/// Direct truncated Euler product over primitive geodesic lengths; requires a
/// trivial-group table and Re(s) > 1.
Complex euler_product_oracle(const OrbitTable& trivial_table, Complex s, double length_cutoff);

/// R_n(s) = |Z^{(n-1)}(s) - Z^{(n)}(s)| / |Z^{(n)}(s)|.
double relative_error(const OrbitTable& table, int irrep_index, int n, Complex s);

} // namespace szeta
