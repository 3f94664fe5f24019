#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cgx/orbifolds.hpp"

using namespace cgx;
using namespace cgx::orbifolds;

namespace {

OrbOrder fin(std::int64_t d) { return OrbOrder::finite(d); }
OrbOrder inf() { return OrbOrder::puncture(); }

}  // namespace

TEST_CASE("euler characteristics") {
    CHECK(euler_char({0, 0}) == Rational(2));
    CHECK(euler_char({0, 5}) == Rational(-3));
    CHECK(euler_char({2, 0}) == Rational(-2));

    CHECK(orb_euler_char(OrbifoldSig(0, {fin(2), fin(2), fin(2), fin(2), fin(2),
                                         fin(2)})) == Rational(-1));
    CHECK(orb_euler_char(OrbifoldSig(0, {inf(), inf(), inf()})) == Rational(-1));
    // Five order-5 points is not the S_{0,5} case; the paper's -1/2 is five
    // order-2 points.
    CHECK(orb_euler_char(OrbifoldSig(0, {fin(2), fin(2), fin(2), fin(2), fin(2)})) ==
          Rational(-1, 2));
}

TEST_CASE("exceptional surface predicate") {
    CHECK(is_exceptional({0, 4}));
    CHECK(is_exceptional({1, 1}));
    CHECK(is_exceptional({1, 2}));
    CHECK(is_exceptional({2, 0}));
    CHECK_FALSE(is_exceptional({0, 5}));
    CHECK_FALSE(is_exceptional({0, 3}));

    // Equivalent characterization: supports pseudo-Anosovs but 2g+n <= 4.
    for (unsigned g = 0; g <= 6; ++g)
        for (unsigned n = 0; n <= 10; ++n) {
            SurfaceSig s{g, n};
            CHECK(is_exceptional(s) ==
                  (s.supports_pseudo_anosov() && !s.beyond_exceptional()));
        }
}

TEST_CASE("the four exceptional covers") {
    struct Row {
        SurfaceSig s;
        OrbifoldSig base;
        int dim;
    };
    std::vector<Row> rows = {
        {{0, 4}, OrbifoldSig(0, {fin(2), fin(2), inf(), inf()}), 2},
        {{1, 1}, OrbifoldSig(0, {fin(2), fin(2), fin(2), inf()}), 2},
        {{1, 2}, OrbifoldSig(0, {fin(2), fin(2), fin(2), fin(2), inf()}), 4},
        {{2, 0}, OrbifoldSig(0, {fin(2), fin(2), fin(2), fin(2), fin(2), fin(2)}),
         6},
    };
    for (const auto& row : rows) {
        CoverCandidate c = exceptional_cover(row.s);
        CHECK(c.base == row.base);
        CHECK(c.degree == 2);
        CHECK(c.multiplicative());
        CHECK(euler_char(row.s) == Rational(2) * orb_euler_char(c.base));
        CHECK(teich_dim(c.base) == row.dim);
        CHECK(teich_dim(OrbifoldSig::from_surface(row.s)) == row.dim);
    }
    CHECK_THROWS_AS(exceptional_cover({0, 5}), NotExceptionalError);
}

TEST_CASE("teichmueller dimension") {
    CHECK(teich_dim(OrbifoldSig::from_surface({1, 1})) == 2);
    CHECK(teich_dim(OrbifoldSig(0, {fin(2), fin(2), fin(2), inf()})) == 2);
    CHECK_THROWS_AS(teich_dim(OrbifoldSig(0, {fin(2), fin(2)})),
                    NotHyperbolicError);

    // Dimension depends only on the number of orbifold points, not orders.
    for (std::int64_t d1 : {2, 3, 5, 7})
        for (std::int64_t d2 : {2, 4, 9}) {
            OrbifoldSig a(0, {fin(d1), fin(d2), fin(2), fin(3), inf()});
            OrbifoldSig b(0, {fin(3), fin(7), fin(11), fin(13), inf()});
            CHECK(teich_dim(a) == teich_dim(b));
        }
}

TEST_CASE("enumerate_signatures: the paper's case equations") {
    // S_{0,5}, degree 5, orders {5, inf}: the equation forces 12 cone points.
    CHECK(enumerate_signatures({0, 5}, 5, {fin(5), inf()}, 5u).empty());

    // S_{0,6}, degree 4, orders {2, 4, inf}: unique solution six order-2.
    auto sols = enumerate_signatures({0, 6}, 4, {fin(2), fin(4), inf()}, 6u);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == OrbifoldSig(0, {fin(2), fin(2), fin(2), fin(2), fin(2),
                                     fin(2)}));

    // S_{0,5}, degree 6, orders {2, 3, 6, inf}: unique solution five order-2.
    auto sols6 = enumerate_signatures({0, 5}, 6, {fin(2), fin(3), fin(6), inf()},
                                      5u);
    REQUIRE(sols6.size() == 1);
    CHECK(sols6[0] == OrbifoldSig(0, {fin(2), fin(2), fin(2), fin(2), fin(2)}));

    // Menu order and duplicates do not matter.
    auto sols6b = enumerate_signatures({0, 5}, 6, {inf(), fin(6), fin(3), fin(2),
                                                   fin(2)}, 5u);
    CHECK(sols6 == sols6b);

    // chi validity: every returned signature multiplies exactly.
    for (const auto& sig : enumerate_signatures({0, 6}, 2, {fin(2), inf()}, 6u))
        CHECK(euler_char({0, 6}) == Rational(2) * orb_euler_char(sig));
}

TEST_CASE("irregular same-signature search: S_{0,5} full case list") {
    auto report = irregular_same_signature_search({0, 5});
    CHECK_FALSE(report.any_feasible);

    auto by_degree = [&](unsigned d) -> const CaseReport& {
        for (const auto& c : report.cases)
            if (c.degree == d) return c;
        REQUIRE(false);
        return report.cases.front();
    };

    // d=3: a = 2n-4 = 6 > 5, no chi-solutions at all.
    const auto& d3 = by_degree(3);
    CHECK(d3.bound_passed);
    CHECK(d3.equation.coeffs ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 1}});
    CHECK(d3.equation.rhs == 6);
    CHECK(d3.solutions.empty());

    // d=4: 2a + b = 9, unique (4,1), rejected for zero punctures.
    const auto& d4 = by_degree(4);
    CHECK(d4.equation.coeffs ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 2}, {4, 1}});
    CHECK(d4.equation.rhs == 9);
    REQUIRE(d4.solutions.size() == 1);
    CHECK(d4.solutions[0].finite_counts ==
          std::vector<std::pair<std::int64_t, unsigned>>{{2, 4}, {4, 1}});
    CHECK(d4.solutions[0].punctures == 0);
    CHECK(d4.solutions[0].rejected);

    // d=5: a = 12, infeasible.
    const auto& d5 = by_degree(5);
    CHECK(d5.equation.rhs == 12);
    CHECK(d5.solutions.empty());

    // d=6: 3a + 2b + c = 15, unique (5,0,0), rejected for zero punctures.
    const auto& d6 = by_degree(6);
    CHECK(d6.equation.coeffs ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{
              {2, 3}, {3, 2}, {6, 1}});
    CHECK(d6.equation.rhs == 15);
    REQUIRE(d6.solutions.size() == 1);
    CHECK(d6.solutions[0].finite_counts ==
          std::vector<std::pair<std::int64_t, unsigned>>{{2, 5}});
    CHECK(d6.solutions[0].rejected);

    // d >= 7 fails the bound n <= (4d-4)/(d-2).
    for (unsigned d = 7; d <= 12; ++d) CHECK_FALSE(by_degree(d).bound_passed);

    CHECK_THROWS_AS(irregular_same_signature_search({1, 1}),
                    ExceptionalInputError);
}

TEST_CASE("irregular search: S_{0,6..8} degree-3 cases") {
    for (unsigned n = 6; n <= 8; ++n) {
        auto report = irregular_same_signature_search({0, n});
        CHECK_FALSE(report.any_feasible);
        for (const auto& c : report.cases) {
            if (c.degree != 3 || !c.bound_passed) continue;
            CHECK(c.equation.rhs == 2 * static_cast<std::int64_t>(n) - 4);
            CHECK(c.solutions.empty());  // a = 2n-4 > n
        }
    }
    // S_{0,6}, d=4: unique (6,0) rejected for zero punctures.
    auto r6 = irregular_same_signature_search({0, 6});
    for (const auto& c : r6.cases) {
        if (c.degree != 4) continue;
        REQUIRE(c.solutions.size() == 1);
        CHECK(c.solutions[0].finite_counts ==
              std::vector<std::pair<std::int64_t, unsigned>>{{2, 6}});
        CHECK(c.solutions[0].rejected);
    }
}

TEST_CASE("multiset equality of signatures is order-insensitive") {
    OrbifoldSig a(0, {fin(2), inf(), fin(3)});
    OrbifoldSig b(0, {fin(3), fin(2), inf()});
    CHECK(a == b);
    CHECK(a.puncture_count() == 1);
    CHECK(a.str() == "S'_0(2,3,inf)");
}
