#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "szeta/surface.hpp"

using namespace szeta;

TEST_CASE("flow-adapted construction for X_{3,0.5930}") {
    const IfsScheme s = build_flow_adapted({3, 0.5930});
    CHECK(s.n_symbols() == 6);
    CHECK(validate_ifs(s).pass());
    CHECK(s.symmetry().size() == 12);
    // translated copies
    for (int j = 0; j < 3; ++j) {
        CHECK(s.disks()[j + 3].center ==
              doctest::Approx(s.disks()[j].center + s.offset()).epsilon(1e-14));
        CHECK(s.disks()[j + 3].radius == doctest::Approx(s.disks()[j].radius));
    }
    // adjacency: i <= 3 connects exactly to {j+3 : j != i}
    CHECK(s.adjacent(1, 5));
    CHECK(s.adjacent(1, 6));
    CHECK_FALSE(s.adjacent(1, 4));
    CHECK_FALSE(s.adjacent(1, 2));
    CHECK_FALSE(s.adjacent(4, 1));
    CHECK(s.adjacent(4, 2));
}

TEST_CASE("funnel lengths at tabulated psi values") {
    CHECK(funnel_length({3, 0.5930}) == doctest::Approx(7.00).epsilon(0.04 / 7));
    CHECK(funnel_length({3, 0.1723}) == doctest::Approx(12.00).epsilon(0.04 / 12));
    CHECK(funnel_length({3, 0.3631}) == doctest::Approx(9.00).epsilon(0.04 / 9));
    // 4-funnel sanity pin for the same construction
    CHECK(funnel_length({4, 0.2311}) == doctest::Approx(10.00).epsilon(0.04 / 10));
}

TEST_CASE("psi_for_length recovers tabulated values") {
    CHECK(std::abs(psi_for_length(3, 12) - 0.1723) < 5e-5);
    CHECK(std::abs(psi_for_length(3, 9) - 0.3631) < 5e-5);
    CHECK(std::abs(psi_for_length(3, 7) - 0.5930) < 5e-5);
    CHECK(std::abs(psi_for_length(4, 10) - 0.2311) < 5e-5);
    CHECK_THROWS_AS(psi_for_length(3, 1e9), OutOfRange);
}

TEST_CASE("psi <-> length round trip") {
    for (int nf : {3, 4, 5})
        for (int L = 5; L <= 15; ++L) {
            const double psi = psi_for_length(nf, L);
            CHECK(std::abs(funnel_length({nf, psi}) - L) < 1e-8);
        }
}

TEST_CASE("invalid psi rejected") {
    CHECK_THROWS_AS(build_flow_adapted({3, 0.0}), InvalidPsi);
    CHECK_THROWS_AS(build_flow_adapted({3, 2.2}), InvalidPsi);
    CHECK_THROWS_AS(build_flow_adapted({4, 1.6}), InvalidPsi);
}

TEST_CASE("Bowen-Series construction") {
    const IfsScheme s = build_bowen_series({7, 7, 7.01});
    CHECK(s.n_symbols() == 4);
    CHECK(validate_ifs(s).pass());
    CHECK(s.symmetry().size() == 4); // Klein four for l1 = l2

    const auto& S1 = s.base_matrices()[0];
    const auto& S2 = s.base_matrices()[1];
    const Matrix2 prod = S1 * S2.inverse();
    CHECK(std::abs(prod.trace() - (-2 * std::cosh(7.01 / 2))) < 1e-9);

    // sigma_2 S_1 sigma_2 = S_2 entrywise (l1 = l2)
    const IfsScheme sym = build_bowen_series({7, 7, 7.0});
    const double a = sym.bowen_series_a();
    const Matrix2 sigma2{0, std::sqrt(a), 1 / std::sqrt(a), 0};
    const Matrix2 conj = sigma2 * sym.base_matrices()[0] * sigma2;
    const Matrix2& T2 = sym.base_matrices()[1];
    CHECK(std::abs(conj.a - T2.a) < 1e-12 * std::abs(T2.a));
    CHECK(std::abs(conj.b - T2.b) < 1e-12 * std::abs(T2.b));
    CHECK(std::abs(conj.c - T2.c) < 1e-12 * std::abs(T2.c));
    CHECK(std::abs(conj.d - T2.d) < 1e-12 * std::abs(T2.d));

    // generic lengths only carry the single reflection
    const IfsScheme asym = build_bowen_series({6, 7, 8});
    CHECK(asym.symmetry().size() == 2);
    CHECK(validate_ifs(asym).pass());
}

TEST_CASE("Bowen-Series solver reports its bracket") {
    CHECK_THROWS_WITH_AS(build_bowen_series({1, 1, 100}),
                         doctest::Contains("no sign change over the solver bracket"),
                         NoSuchSurface);
    // small equal lengths: the trace condition solves but the isometric disks
    // collide, which the validator must catch
    CHECK_THROWS_AS(build_bowen_series({0.5, 0.5, 0.5}), ValidationFailed);
}

TEST_CASE("validator passes across a psi sweep") {
    for (int nf : {3, 4, 5, 6}) {
        const double hi = 2 * 3.14159265358979 / nf;
        for (int i = 1; i <= 20; ++i) {
            const double psi = hi * i / 21.0;
            const IfsScheme s = build_flow_adapted({nf, psi});
            CHECK(validate_ifs(s).pass());
        }
    }
    CHECK(validate_ifs(build_bowen_series({12, 12, 12})).pass());
}

TEST_CASE("closed word matrices and worked lengths") {
    const IfsScheme s = build_flow_adapted({3, 0.5930});
    // closed words of the two length-1 classes and the length-2 class
    const std::vector<int> w_minus{5, 1, 5};             // (-1) iterated twice
    const std::vector<int> w_plus{5, 3, 4, 2, 6, 1, 5};  // (1) iterated six times
    const std::vector<int> w_mix{3, 5, 1, 5, 3};         // (1,-1) iterated twice

    const ScaledMatrix m_minus = closed_word_matrix(s, w_minus);
    const double tr = std::abs(m_minus.mat.trace()) * std::ldexp(1.0, m_minus.exp2);
    CHECK(tr == doctest::Approx(2 * std::cosh(3.5)).epsilon(0.005));

    CHECK(displacement_length(m_minus) / 2 == doctest::Approx(3.500).epsilon(0.005 / 3.5));
    CHECK(displacement_length(closed_word_matrix(s, w_plus)) / 6 ==
          doctest::Approx(3.530).epsilon(0.005 / 3.53));
    CHECK(displacement_length(closed_word_matrix(s, w_mix)) / 2 ==
          doctest::Approx(7.032).epsilon(0.005 / 7.03));

    CHECK_THROWS_AS(closed_word_matrix(s, {1, 5, 3}), NotClosed);
    CHECK_THROWS_AS(closed_word_matrix(s, {1, 4, 1}), InvalidTransition);

    // Bowen-Series single-generator geodesic
    const IfsScheme bs = build_bowen_series({7, 7, 7.01});
    CHECK(displacement_length(closed_word_matrix(bs, {1, 1})) == doctest::Approx(7.0));
    CHECK(displacement_length(closed_word_matrix(bs, {2, 2})) == doctest::Approx(7.0));
}

TEST_CASE("edge maps nest into their target disks") {
    const IfsScheme s = build_flow_adapted({4, 0.1010});
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            if (!s.adjacent(i, j)) continue;
            const Disk img = s.edge_map(i, j).image(s.disks()[i - 1]);
            const Disk& tgt = s.disks()[j - 1];
            CHECK(std::abs(img.center - tgt.center) + img.radius < tgt.radius);
        }
    CHECK_THROWS_AS(s.edge_map(1, 2), InvalidTransition);
}

TEST_CASE("symmetry action commutes with the edge maps") {
    // g phi_{i,j}(u) = phi_{gi,gj}(g u) on sample points, for all generators
    for (const IfsScheme& s :
         {build_flow_adapted({3, 0.5930}), build_flow_adapted({4, 0.3}),
          build_bowen_series({7, 7, 7.01})}) {
        const Group& G = s.symmetry();
        std::vector<int> gens;
        for (int e = 1; e < G.size(); ++e) {
            const auto& abc = G.normal_form(e);
            if (abc[0] + abc[1] + abc[2] == 1) gens.push_back(e);
        }
        const int N = s.n_symbols();
        for (int g : gens)
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    if (!s.adjacent(i, j)) continue;
                    const int gi = G.apply(g, i), gj = G.apply(g, j);
                    REQUIRE(s.adjacent(gi, gj));
                    const Disk& di = s.disks()[i - 1];
                    for (int k = 0; k < 10; ++k) {
                        const Complex u(di.center + di.radius * (k - 4.5) / 5.0,
                                        0.1 * di.radius);
                        const Complex lhs = s.point_action(G, g, j, s.edge_map(i, j).apply(u));
                        const Complex rhs = s.edge_map(gi, gj).apply(s.point_action(G, g, i, u));
                        REQUIRE(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
                    }
                }
    }
}

TEST_CASE("surface spec parse/render round trip") {
    for (const std::string text : {"sym:3:0.5930", "bs:7,7,7.01", "sym:4:0.1010"}) {
        const SurfaceSpec spec = parse_surface(text);
        CHECK(render_surface(parse_surface(render_surface(spec))) == render_surface(spec));
    }
    CHECK_THROWS_AS(parse_surface("zeta:1"), UsageError);
    CHECK_THROWS_AS(parse_surface("bs:1;2;3"), UsageError);
}
