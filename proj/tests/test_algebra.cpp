#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "loophom/algebra.hpp"
#include "loophom/commutative.hpp"
#include "support.hpp"

using namespace loophom;
using support::el;
using support::mono;

namespace {

Presentation theorem1() { return support::fixture("theorem1.alg").presentation; }

std::vector<std::string> formatted(const CommutativeRing& r, const std::vector<Monomial>& ms)
{
    std::vector<std::string> out;
    for (const auto& m : ms)
        out.push_back(r.format(m));
    std::sort(out.begin(), out.end());
    return out;
}

// Degree-n dimension of a commutative quotient by linear algebra on the
// relation multiples { m * r }, with no Groebner basis involved.
std::uint64_t quotient_dim_oracle(const CommutativeRing& ring, int n)
{
    const auto& vars = ring.variables();
    std::function<void(std::size_t, int, Monomial&, std::vector<Monomial>&)> enumerate =
        [&](std::size_t i, int left, Monomial& cur, std::vector<Monomial>& out) {
            if (i == vars.size()) {
                if (!left)
                    out.push_back(cur);
                return;
            }
            for (int e = 0; e * vars[i].degree <= left; ++e) {
                cur[i] = static_cast<std::uint16_t>(e);
                enumerate(i + 1, left - e * vars[i].degree, cur, out);
            }
            cur[i] = 0;
        };
    auto monomials = [&](int d) {
        std::vector<Monomial> out;
        if (d < 0)
            return out;
        Monomial cur(vars.size(), 0);
        enumerate(0, d, cur, out);
        return out;
    };
    const auto basis = monomials(n);
    std::map<Monomial, std::size_t> index;
    for (const auto& m : basis)
        index.emplace(m, index.size());
    std::vector<std::vector<int>> rows;
    for (const auto& r : ring.relations()) {
        const int dr = *ring.degree(r);
        for (const auto& m : monomials(n - dr)) {
            std::vector<int> row(basis.size(), 0);
            for (const auto& t : r) {
                Monomial p = t;
                for (std::size_t i = 0; i < p.size(); ++i)
                    p[i] = static_cast<std::uint16_t>(p[i] + m[i]);
                row[index.at(p)] ^= 1;
            }
            rows.push_back(std::move(row));
        }
    }
    return basis.size() - support::naive_rank(rows);
}

}  // namespace

TEST_CASE("normal forms in the Theorem-1 presentation")
{
    Algebra a(theorem1());
    const auto& p = a.presentation();
    CHECK(a.normal_form(std::vector<std::string>{"z6", "a4"}) == el(p, "a4*z6 + b10 + a2*a4^2"));
    CHECK(a.normal_form(std::vector<std::string>{"a2", "a2"}).is_zero());
    CHECK(a.normal_form(std::vector<std::string>{"b10", "z6"}) == el(p, "z6*b10 + a4^4"));
    CHECK(a.normal_form(std::vector<std::string>{"z6", "a2"}) == el(p, "a2*z6 + a4^2"));
    CHECK(a.normal_form(std::vector<std::string>{}) == el(p, "1"));
    CHECK_THROWS_AS(a.normal_form(std::vector<std::string>{"q7"}), UnknownGenerator);
}

TEST_CASE("PBW basis enumeration")
{
    const Algebra a(theorem1());
    const auto& p = a.presentation();
    std::vector<Monomial> eight = a.basis_in_degree(8);
    std::vector<Monomial> want{mono(p, "a4^2"), mono(p, "a2*z6"), mono(p, "x3*x5")};
    std::sort(want.begin(), want.end());
    CHECK(eight == want);
    CHECK(a.basis_in_degree(1).empty());
    CHECK(a.basis_in_degree(0) == std::vector<Monomial>{p.unit()});
}

TEST_CASE("Poincare series against an independent convolution oracle")
{
    const Algebra t1(theorem1());
    CHECK(t1.poincare(10).to_string() == "(1,0,1,1,1,2,2,2,3,3,4)");
    const auto oracle1 = support::series_oracle({{2, 2}, {3, 2}, {4, 0}, {5, 2}, {6, 2}, {10, 0}}, 40);
    CHECK(t1.poincare(40) == oracle1);

    const Algebra t2(support::fixture("theorem2.alg").presentation);
    const auto oracle2 =
        support::series_oracle({{6, 2}, {7, 2}, {10, 0}, {11, 2}, {12, 0}, {13, 2}, {14, 2}, {26, 0}}, 48);
    CHECK(t2.poincare(48) == oracle2);
    CHECK(oracle2[13] == 2);
    CHECK(oracle2[14] == 1);
    CHECK(oracle2[26] >= 2);

    CHECK(Algebra(support::fixture("omega_di4.alg").presentation).poincare(26)[26] == 2);
    CHECK(Algebra(support::fixture("omega_g2.alg").presentation).poincare(10)[10] == 2);
}

TEST_CASE("confluence")
{
    Algebra t1(theorem1());
    CHECK(t1.check_confluence(40).pass());

    // central extension: [a,b] = c with c central
    Presentation toy("toy", {{"a", 1, 0}, {"b", 1, 0}, {"c", 2, 0}});
    toy.set_commutator(0, 1, Element(toy.generator_monomial(2)));
    CHECK(Algebra(toy).check_confluence(12).pass());

    Presentation broken = theorem1();
    broken.set_commutator(broken.index_of("b10"), broken.index_of("z6"), Element());
    Algebra b(broken);
    const auto r = b.check_confluence(20);
    REQUIRE_FALSE(r.pass());
    CHECK(r.failures.front().degree == 16);
    CHECK(broken.format_word(r.failures.front().word) == "z6.z6.a4");
    CHECK(r.failures.front().difference == el(broken, "a4^4"));
    CHECK(b.check_confluence(15).pass());
}

TEST_CASE("commutator validation")
{
    Presentation p = theorem1();
    CHECK_THROWS_AS(p.set_commutator(p.index_of("a2"), p.index_of("z6"), el(p, "a4^2 + x3")), InhomogeneousRelation);
    // argument order does not matter
    p.set_commutator(p.index_of("z6"), p.index_of("a2"), el(p, "a4^2"));
    CHECK(p.commutator(p.index_of("a2"), p.index_of("z6")) == el(p, "a4^2"));
    CHECK_THROWS_AS(Presentation("bad", {{"g", 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation("bad", {{"g", 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation("bad", {{"g", 2, 0}, {"g", 3, 0}}), std::invalid_argument);
    // generators are sorted by degree, ties kept in listed order
    const Presentation s("s", {{"b", 4, 0}, {"a", 2, 0}, {"c", 2, 0}});
    CHECK(s.generator(0).name == "a");
    CHECK(s.generator(1).name == "c");
}

TEST_CASE("property: normal form is idempotent")
{
    Algebra a(theorem1());
    const auto& p = a.presentation();
    support::Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::size_t> word;
        int degree = 0;
        while (degree < 30) {
            word.push_back(support::below(rng, p.size()));
            degree += p.generator(word.back()).degree;
        }
        const Element nf = a.normal_form(word);
        Element again;
        for (const auto& m : nf) {
            CHECK(p.is_normal(m));
            again += a.normal_form(p.word_of(m));
        }
        CHECK(again == nf);
    }
}

TEST_CASE("property: multiplication is associative on basis triples")
{
    for (const char* file : {"theorem1.alg", "theorem2.alg"}) {
        Algebra a(support::fixture(file).presentation);
        const int cap = 22;
        std::vector<Monomial> basis;
        for (int n = 1; n <= cap; ++n)
            for (const auto& m : a.basis_in_degree(n))
                basis.push_back(m);
        const auto& p = a.presentation();
        std::size_t triples = 0;
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) {
                    if (p.degree(x) + p.degree(y) + p.degree(z) > cap)
                        continue;
                    ++triples;
                    REQUIRE(a.multiply(a.multiply(x, y), Element(z)) == a.multiply(Element(x), a.multiply(y, z)));
                }
        CHECK(triples > 0);
    }
}

TEST_CASE("commutative quotient bases")
{
    const auto bg2q = support::fixture("bg2q.ring").ring;
    const QuotientRing q(bg2q, 14);
    CHECK(formatted(bg2q, commutative_quotient_basis(q, 10)) ==
          std::vector<std::string>{"u4*u6", "y3*t7", "y3^2*u4"});
    CHECK(formatted(bg2q, q.standard_basis(0)) == std::vector<std::string>{"1"});
    CHECK_THROWS_AS(q.standard_basis(15), CapExceeded);

    const auto bsol = support::fixture("bsolq.ring").ring;
    const QuotientRing qs(bsol, 20);
    CHECK(formatted(bsol, qs.standard_basis(14)) == std::vector<std::string>{"t7^2", "u14"});
}

TEST_CASE("quotient dims match the relation-multiple oracle and ignore variable order")
{
    const auto bg2q = support::fixture("bg2q.ring").ring;
    const QuotientRing q(bg2q, 20);
    for (int n = 0; n <= 20; ++n)
        CHECK(q.dims()[n] == quotient_dim_oracle(bg2q, n));

    const auto bsol = support::fixture("bsolq.ring").ring;
    const QuotientRing listed(bsol, 20);
    const QuotientRing reversed(bsol.reordered({"t13", "t11", "t7", "u15", "u14", "u12", "u8"}), 20);
    CHECK(listed.dims() == reversed.dims());
    for (int n = 0; n <= 20; ++n)
        CHECK(listed.dims()[n] == quotient_dim_oracle(bsol, n));
}

TEST_CASE("reduction into the standard basis")
{
    const auto bg2q = support::fixture("bg2q.ring").ring;
    const QuotientRing q(bg2q, 14);
    // y5^2 = y3*t7 + y3^2*u4 in the quotient
    CHECK(q.reduce(el(bg2q, "y5^2")) == el(bg2q, "y3*t7 + y3^2*u4"));
    CHECK(q.multiply(mono(bg2q, "y5"), mono(bg2q, "y5")) == el(bg2q, "y3*t7 + y3^2*u4"));
    CHECK(q.reduce(el(bg2q, "y5^2 + y3*t7 + y3^2*u4")).is_zero());
}
