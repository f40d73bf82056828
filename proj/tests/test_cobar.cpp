#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "loophom/cobar.hpp"
#include "support.hpp"

using namespace loophom;

namespace {

CoalgebraData ring_dual(const CommutativeRing& r, int cap) { return dual_structure_constants(QuotientRing(r, cap), cap); }
CoalgebraData ring_dual(const std::string& file, int cap) { return ring_dual(support::fixture(file).ring, cap); }

CoalgebraData algebra_dual(const std::string& file, int cap)
{
    const auto f = support::fixture(file);
    Bialgebra b(f.presentation, f.coproduct);
    return coalgebra_of(b, cap);
}

bool contains(const CobarSum& s, const CobarWord& w)
{
    return std::find(s.begin(), s.end(), w) != s.end();
}

CobarSum sum(const CoalgebraData& c, const std::vector<std::vector<std::string>>& words)
{
    CobarSum s;
    for (const auto& w : words)
        s.toggle(cobar_word(c, w));
    return s;
}

}  // namespace

TEST_CASE("cobar differential examples")
{
    const auto c = ring_dual("bg2q.ring", 12);
    CHECK(cobar_differential(sum(c, {{"y3"}}), c).is_zero());
    CHECK(cobar_differential(sum(c, {{"y3*t7"}}), c) == sum(c, {{"y3", "t7"}, {"t7", "y3"}, {"y5", "y5"}}));
    CHECK(format(sum(c, {{"y5", "y5"}}), c) == "[y5|y5]");
    CHECK_THROWS_AS(cobar_word(c, {"nope"}), UnknownLetter);
    CHECK(cobar_degree(cobar_word(c, {"y3", "t7"}), c) == 8);
}

TEST_CASE("d of the dual of y5^2 when y5^2 is a standard monomial")
{
    const auto ring = support::fixture("bg2q.ring").ring.reordered({"y3", "y5", "u4", "u6", "t7"});
    const auto c = ring_dual(ring, 12);
    REQUIRE(c.find("y5^2"));
    const auto d = cobar_differential(sum(c, {{"y5^2"}}), c);
    CHECK(contains(d, cobar_word(c, {"y5", "y5"})));
    // every other term involves a letter divisible by u4
    for (const auto& w : d) {
        if (w == cobar_word(c, {"y5", "y5"}))
            continue;
        bool has_u4 = false;
        for (auto letter : w)
            has_u4 = has_u4 || c.labels[letter].find("u4") != std::string::npos;
        CHECK(has_u4);
    }
}

TEST_CASE("Cotor over H_*(DI(4))")
{
    const auto c = algebra_dual("di4.alg", 30);
    const auto dims = cotor(c, 28);
    CHECK(dims == support::series_oracle({{6, 2}, {10, 0}, {12, 0}, {26, 0}}, 28));
    CHECK(dims[6] == 1);
    CHECK(dims[16] == 1);
    CHECK(dims[26] == 2);
    CHECK(dims == Algebra(support::fixture("omega_di4.alg").presentation).poincare(28));
    CHECK_THROWS_AS(cotor(c, 29), CapExceeded);
}

TEST_CASE("Cotor of one primitive exterior generator")
{
    for (int n : {3, 5, 7}) {
        Presentation p("e", {{"x", n, 2}});
        Bialgebra b(p, CoproductSpec(p));
        const auto dims = cotor(coalgebra_of(b, 26), 24);
        for (int d = 0; d <= 24; ++d)
            CHECK(dims[d] == (d % (n - 1) == 0 ? 1U : 0U));
    }
}

TEST_CASE("Cotor of the classifying-space coalgebras")
{
    CHECK(cotor(ring_dual("bg2q.ring", 14), 12) ==
          support::series_oracle({{2, 2}, {3, 2}, {4, 0}, {5, 2}, {6, 2}, {10, 0}}, 12));
    CHECK(cotor(ring_dual("bsolq.ring", 22), 20) ==
          support::series_oracle({{6, 2}, {7, 2}, {10, 0}, {11, 2}, {12, 0}, {13, 2}, {14, 2}, {26, 0}}, 20));
}

TEST_CASE("Cotor does not depend on the basis order")
{
    const auto ring = support::fixture("bsolq.ring").ring;
    const auto listed = cotor(ring_dual(ring, 18), 16);
    const auto reordered = cotor(ring_dual(ring.reordered({"t13", "t11", "t7", "u15", "u14", "u12", "u8"}), 18), 16);
    CHECK(listed == reordered);
}

TEST_CASE("boundary claims")
{
    const auto g = ring_dual("bg2q.ring", 10);
    const auto w = sum(g, {{"y5", "y5"}, {"y3", "t7"}, {"t7", "y3"}});
    const auto v = is_boundary(w, g);
    REQUIRE(v.boundary);
    CHECK(cobar_differential(v.witness, g) == w);
    CHECK(format(v.witness, g) == "[y3*t7]");
    CHECK_FALSE(is_boundary(sum(g, {{"y3"}}), g).boundary);
    CHECK_THROWS_AS(is_boundary(sum(g, {{"y3*t7"}}), g), NotACycle);

    const auto s = ring_dual("bsolq.ring", 22);
    const auto w2 = sum(s, {{"t11", "t11"}, {"u15", "t7"}, {"t7", "u15"}});
    const auto v2 = is_boundary(w2, s);
    REQUIRE(v2.boundary);
    CHECK(cobar_differential(v2.witness, s) == w2);
}

TEST_CASE("the three bottom letters are permanent")
{
    const auto g = ring_dual("bg2q.ring", 8);
    for (auto [letter, degree] : {std::pair{"y3", 2}, std::pair{"y5", 4}, std::pair{"t7", 6}}) {
        const auto w = sum(g, {{letter}});
        CHECK(cobar_degree(*w.begin(), g) == degree);
        CHECK(cobar_differential(w, g).is_zero());
        CHECK_FALSE(is_boundary(w, g).boundary);
    }
}

TEST_CASE("property: d_E squares to zero and raises length by one")
{
    const std::vector<std::pair<CoalgebraData, int>> coalgebras{
        {ring_dual("bg2q.ring", 16), 14}, {ring_dual("bsolq.ring", 22), 20}, {algebra_dual("theorem1.alg", 16), 14}};
    for (const auto& [c, cap] : coalgebras) {
        for (int n = 0; n <= cap; ++n) {
            for (const auto& w : cobar_basis(c, n)) {
                const CobarSum d = cobar_differential(CobarSum(w), c);
                for (const auto& t : d) {
                    CHECK(t.size() == w.size() + 1);
                    CHECK(cobar_degree(t, c) == n - 1);
                }
                CHECK(cobar_differential(d, c).is_zero());
            }
        }
    }
}

TEST_CASE("homology of the cobar complex of H_*(DI(4)) in degree 6")
{
    CHECK(cotor(algebra_dual("di4.alg", 8), 6)[6] == 1);
}
