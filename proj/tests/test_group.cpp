#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "szeta/group.hpp"

using namespace szeta;

namespace {

// parse "(1,6,2,4,3,5)" / "(1,4)(2,5)(3,6)" / "()" into a permutation
Perm parse_cycles(const std::string& text, int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        const size_t close = text.find(')', pos);
        std::vector<int> cyc;
        std::stringstream ss(text.substr(pos + 1, close - pos - 1));
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) cyc.push_back(std::stoi(tok));
        for (size_t i = 0; i + 1 < cyc.size(); ++i) p[cyc[i] - 1] = cyc[i + 1];
        if (cyc.size() > 1) p[cyc.back() - 1] = cyc.front();
        pos = close + 1;
    }
    return p;
}

int element(const Group& g, const std::string& cycles) {
    return g.element_from_perm(parse_cycles(cycles, g.n_symbols()));
}

struct RefTable {
    std::vector<std::string> class_perms;
    std::vector<std::vector<double>> rows;
};

// Row/column matching: columns are located through the printed class
// representatives, rows through exact value-vector equality, each generated
// irrep used at most once.
void check_table_matches(const Group& g, const RefTable& ref) {
    REQUIRE(static_cast<int>(ref.class_perms.size()) == g.n_classes());
    REQUIRE(static_cast<int>(ref.rows.size()) == static_cast<int>(g.irreps().size()));
    std::vector<int> col_elem;
    for (const auto& cp : ref.class_perms) col_elem.push_back(element(g, cp));
    std::set<size_t> used;
    for (const auto& ref_row : ref.rows) {
        bool matched = false;
        for (size_t i = 0; i < g.irreps().size() && !matched; ++i) {
            if (used.count(i)) continue;
            bool equal = true;
            for (size_t c = 0; c < col_elem.size(); ++c)
                if (std::abs(g.character_value(static_cast<int>(i), col_elem[c]) - ref_row[c]) >
                    1e-12)
                    equal = false;
            if (equal) {
                used.insert(i);
                matched = true;
            }
        }
        CHECK_MESSAGE(matched, "no generated irrep matches a reference row");
    }
}

} // namespace

TEST_CASE("element orders and powers") {
    const Group g = Group::dihedral_times_z2(3);
    CHECK(g.order(element(g, "(1,6,2,4,3,5)")) == 6);
    CHECK(g.order(element(g, "(1,5)(2,4)(3,6)")) == 2);
    CHECK(g.power(g.identity(), 7) == g.identity());
    CHECK(g.size() == 12);
}

TEST_CASE("dihedral relations") {
    for (int nf : {3, 4, 5, 6}) {
        const Group g = Group::dihedral_times_z2(nf);
        int rot = -1, refl = -1, swap = -1;
        for (int e = 0; e < g.size(); ++e) {
            const auto& abc = g.normal_form(e);
            if (abc == std::array<int, 3>{1, 0, 0}) rot = e;
            if (abc == std::array<int, 3>{0, 1, 0}) refl = e;
            if (abc == std::array<int, 3>{0, 0, 1}) swap = e;
        }
        // refl rot refl = rot^{-1}; swap central
        CHECK(g.multiply(g.multiply(refl, rot), refl) == g.inverse(rot));
        for (int e = 0; e < g.size(); ++e)
            CHECK(g.multiply(swap, e) == g.multiply(e, swap));
    }
}

TEST_CASE("symbol permutations of the generators") {
    const Group g3 = Group::dihedral_times_z2(3);
    int swap3 = -1;
    for (int e = 0; e < g3.size(); ++e)
        if (g3.normal_form(e) == std::array<int, 3>{0, 0, 1}) swap3 = e;
    CHECK(g3.symbol_permutation(swap3) == parse_cycles("(1,4)(2,5)(3,6)", 6));

    const Group g4 = Group::dihedral_times_z2(4);
    int refl4 = -1;
    for (int e = 0; e < g4.size(); ++e)
        if (g4.normal_form(e) == std::array<int, 3>{0, 1, 0}) refl4 = e;
    CHECK(g4.symbol_permutation(refl4) == parse_cycles("(1,4)(2,3)(5,8)(6,7)", 8));

    CHECK(g3.symbol_permutation(g3.identity()) == parse_cycles("()", 6));
}

TEST_CASE("symbol action is a homomorphism") {
    for (int nf : {3, 4, 5, 6}) {
        const Group g = Group::dihedral_times_z2(nf);
        for (int a = 0; a < g.size(); ++a)
            for (int b = 0; b < g.size(); ++b) {
                const Perm& pa = g.symbol_permutation(a);
                const Perm& pb = g.symbol_permutation(b);
                const Perm& pab = g.symbol_permutation(g.multiply(a, b));
                for (int s = 1; s <= g.n_symbols(); ++s)
                    REQUIRE(pab[s - 1] == pa[pb[s - 1] - 1]);
            }
    }
}

TEST_CASE("character values") {
    const Group g = Group::dihedral_times_z2(3);
    CHECK(g.character_value(g.irrep("III_1"), g.identity()) == doctest::Approx(2.0));
    CHECK(g.character_value(g.irrep("I_2"), element(g, "(1,4)(2,5)(3,6)")) ==
          doctest::Approx(-1.0));
    const Group k = Group::klein_four();
    CHECK(k.character_value(k.irrep("C"), element(k, "(1,2)(3,4)")) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(g.irrep("X_9"), UnknownIrrep);
}

TEST_CASE("characters are class functions") {
    for (const Group& g : {Group::dihedral_times_z2(3), Group::dihedral_times_z2(4),
                           Group::dihedral_times_z2(5), Group::klein_four()}) {
        for (const auto& irr : g.irreps())
            for (int e = 0; e < g.size(); ++e)
                for (int h = 0; h < g.size(); ++h) {
                    const int conj = g.multiply(g.multiply(h, e), g.inverse(h));
                    REQUIRE(g.character_value(irr, e) == g.character_value(irr, conj));
                }
    }
}

TEST_CASE("character orthogonality") {
    for (const Group& g : {Group::dihedral_times_z2(3), Group::dihedral_times_z2(4),
                           Group::dihedral_times_z2(5), Group::dihedral_times_z2(6),
                           Group::klein_four(), Group::z2_reflection()}) {
        int dim_sq = 0;
        for (const auto& irr : g.irreps()) dim_sq += irr.dim * irr.dim;
        CHECK(dim_sq == g.size());
        for (size_t i = 0; i < g.irreps().size(); ++i)
            for (size_t j = 0; j < g.irreps().size(); ++j) {
                double inner = 0;
                for (int e = 0; e < g.size(); ++e)
                    inner += g.character_value(static_cast<int>(i), e) *
                             g.character_value(static_cast<int>(j), e);
                inner /= g.size();
                CHECK(std::abs(inner - (i == j ? 1.0 : 0.0)) < 1e-12);
            }
    }
}

TEST_CASE("D3 x Z2 table matches the reference entrywise") {
    RefTable ref;
    ref.class_perms = {"()", "(2,3)(5,6)", "(1,2,3)(4,5,6)", "(1,4)(2,5)(3,6)",
                       "(1,4)(2,6)(3,5)", "(1,5,3,4,2,6)"};
    ref.rows = {{1, 1, 1, 1, 1, 1},    {1, 1, 1, -1, -1, -1}, {1, -1, 1, 1, -1, 1},
                {1, -1, 1, -1, 1, -1}, {2, 0, -1, -2, 0, 1},  {2, 0, -1, 2, 0, -1}};
    check_table_matches(Group::dihedral_times_z2(3), ref);
}

TEST_CASE("closing elements from the circle walk") {
    const Group g = Group::dihedral_times_z2(3);
    CHECK(g.closing_element(1, +1, 5, +1) == element(g, "(1,6,2,4,3,5)"));
    CHECK(g.closing_element(1, +1, 5, -1) == element(g, "(1,5)(2,4)(3,6)"));
    // the walk of (1,-1) ends at circle 3 with flipped orientation
    const int e = g.closing_element(1, +1, 3, -1);
    CHECK(g.apply(e, 3) == 1);
    CHECK(g.apply(e, 1) == 3);
    CHECK(g.apply(e, 4) == 6);
    CHECK(g.apply(e, 6) == 4);
    CHECK(g.apply(e, 2) == 2);
    CHECK(g.apply(e, 5) == 5);
}

TEST_CASE("closing element is unique over all start/end pairs") {
    for (int nf : {3, 4, 5}) {
        const Group g = Group::dihedral_times_z2(nf);
        for (int start = 1; start <= 2 * nf; ++start)
            for (int end = 1; end <= 2 * nf; ++end)
                for (int so : {-1, +1})
                    for (int eo : {-1, +1}) {
                        const int e = g.closing_element(start, so, end, eo);
                        int count = 0;
                        for (int h = 0; h < g.size(); ++h)
                            if (g.apply(h, end) == start &&
                                g.orientation_preserving(h) == (so == eo))
                                ++count;
                        REQUIRE(count == 1);
                        REQUIRE(g.apply(e, end) == start);
                    }
    }
}

TEST_CASE("trivial group") {
    const Group t = Group::trivial(6);
    CHECK(t.size() == 1);
    CHECK(t.order(0) == 1);
    CHECK(t.irreps().size() == 1);
    CHECK(t.character_value(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("group mismatch guard") {
    const Group g = Group::dihedral_times_z2(3);
    CHECK_THROWS_AS(g.multiply(0, 99), GroupMismatch);
    CHECK_THROWS_AS(Group::klein_four().closing_element(1, 1, 2, 1), ContextMismatch);
}
