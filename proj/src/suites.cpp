#include "loophom/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "loophom/arith.hpp"
#include "loophom/cobar.hpp"
#include "loophom/fixtures.hpp"
#include "loophom/resolution.hpp"
#include "loophom/spectra.hpp"
#include "loophom/steenrod.hpp"

#ifndef LOOPHOM_FIXTURE_DIR
#define LOOPHOM_FIXTURE_DIR "fixtures"
#endif

namespace loophom {

namespace {

using CheckFn = std::function<CheckResult(int cap)>;

struct Check {
    std::string name;
    std::string anchor;
    int default_cap = 0;
    CheckFn fn;
};

struct Plan {
    std::string suite;
    std::vector<Check> checks;
};

using FixturePtr = std::shared_ptr<const Fixture>;

class Loader {
public:
    explicit Loader(std::string dir) : dir_(std::move(dir)) {}

    std::string path(const std::string& file) const
    {
        if (std::filesystem::path(file).is_absolute() || std::filesystem::exists(file))
            return file;
        return (std::filesystem::path(dir_) / file).string();
    }

    FixturePtr fixture(const std::string& file)
    {
        auto& slot = cache_[file];
        if (!slot)
            slot = std::make_shared<const Fixture>(load_fixture_file(path(file)));
        return slot;
    }

    std::shared_ptr<const ScheduleFile> schedule(const std::string& file)
    {
        return std::make_shared<const ScheduleFile>(load_schedule_file(path(file)));
    }

private:
    std::string dir_;
    std::map<std::string, FixturePtr> cache_;
};

std::string dims_witness(const GradedDims& got, const GradedDims& want, int n)
{
    return "degree " + std::to_string(n) + ": got " + std::to_string(got[n]) + ", expected " +
           std::to_string(want[n]);
}

CheckResult compare_dims(const GradedDims& got, const GradedDims& want)
{
    if (auto n = got.first_difference(want))
        return CheckResult::failed(*n, dims_witness(got, want, *n));
    return CheckResult::ok(got.to_string());
}

CheckResult from_report(CheckReport report)
{
    if (auto f = report.first())
        return CheckResult::failed(f->degree, f->check + ": " + f->witness);
    return CheckResult::ok(std::to_string(report.items_checked) + " items");
}

std::string anchor_of(const Fixture& f, const std::string& check, std::string fallback)
{
    auto it = f.anchors.find(check);
    return it == f.anchors.end() ? std::move(fallback) : it->second;
}

// The checks every algebra or ring fixture is held to.
std::vector<Check> fixture_checks(const FixturePtr& f, int cap, const std::string& prefix = {})
{
    std::vector<Check> out;
    auto name = [&](const std::string& c) { return prefix.empty() ? c : prefix + "." + c; };

    if (f->is_ring) {
        if (!f->expect_product.empty() || f->expect_dims) {
            out.push_back({name("groebner"), anchor_of(*f, "groebner", "quotient ring dims of " + f->name), cap,
                           [f](int n) {
                               const QuotientRing q(f->ring, n);
                               const GradedDims want =
                                   f->expect_dims ? f->expect_dims->truncated(std::min(n, f->expect_dims->cap()))
                                                  : product_series(f->expect_product, n);
                               return compare_dims(q.dims(), want);
                           }});
        }
        if (!f->ring.squares().empty())
            out.push_back({name("squares"), anchor_of(*f, "squares", "declared cohomology squares are homogeneous"),
                           cap, [f](int) { return from_report(verify_cohomology_squares(f->ring)); }});
        return out;
    }

    out.push_back({name("confluence"), anchor_of(*f, "confluence", "commutator table of " + f->name + " is confluent"),
                   cap, [f](int n) {
                       Algebra a(f->presentation);
                       const auto r = a.check_confluence(n);
                       if (r.pass())
                           return CheckResult::ok(std::to_string(r.overlaps_checked) + " overlaps");
                       const auto& first = r.failures.front();
                       return CheckResult::failed(first.degree, a.presentation().format_word(first.word) + " -> " +
                                                                    a.presentation().format(first.difference));
                   }});
    if (!f->expect_product.empty() || f->expect_dims) {
        out.push_back({name("poincare"), anchor_of(*f, "poincare", "PBW dims of " + f->name), cap, [f](int n) {
                           const Algebra a(f->presentation);
                           if (f->expect_dims) {
                               const int top = std::min(n, f->expect_dims->cap());
                               if (auto bad = a.poincare(top).first_difference(f->expect_dims->truncated(top)))
                                   return CheckResult::failed(*bad, dims_witness(a.poincare(top), *f->expect_dims, *bad));
                           }
                           if (!f->expect_product.empty())
                               return compare_dims(a.poincare(n), product_series(f->expect_product, n));
                           return CheckResult::ok();
                       }});
    }
    if (f->expect_unit) {
        out.push_back({name("unit"), anchor_of(*f, "unit", "homology is the ground field"), cap, [f](int n) {
                           return compare_dims(homology_of_derivation(f->presentation, f->effective_differential(), n),
                                               GradedDims::unit(n));
                       }});
    }
    out.push_back({name("bialgebra"), anchor_of(*f, "bialgebra", "coproduct of " + f->name + " is compatible"), cap,
                   [f](int n) { return from_report(Bialgebra(f->presentation, f->coproduct).verify(n)); }});
    out.push_back({name("steenrod"), anchor_of(*f, "steenrod", "Steenrod action on " + f->name), cap, [f](int n) {
                       return from_report(SteenrodModule(f->presentation, f->coproduct, f->steenrod).verify(n));
                   }});
    return out;
}

Check spot_dims(const FixturePtr& f, std::vector<std::pair<int, std::uint64_t>> exact,
                std::vector<std::pair<int, std::uint64_t>> at_least, std::string anchor)
{
    return {"spot-dims", std::move(anchor), 0, [f, exact, at_least](int cap) {
                const Algebra a(f->presentation);
                std::size_t checked = 0;
                for (auto [n, want] : exact) {
                    if (n > cap)
                        continue;
                    ++checked;
                    if (const auto got = a.basis_in_degree(n).size(); got != want)
                        return CheckResult::failed(n, "degree " + std::to_string(n) + ": got " + std::to_string(got) +
                                                          ", expected " + std::to_string(want));
                }
                for (auto [n, want] : at_least) {
                    if (n > cap)
                        continue;
                    ++checked;
                    if (const auto got = a.basis_in_degree(n).size(); got < want)
                        return CheckResult::failed(n, "degree " + std::to_string(n) + ": got " + std::to_string(got) +
                                                          ", expected at least " + std::to_string(want));
                }
                if (!checked)
                    return CheckResult::skipped("all spot degrees above cap");
                return CheckResult::ok(std::to_string(checked) + " degrees");
            }};
}

Plan theorem_plan(Loader& load, const std::string& suite, const std::string& file, int cap,
                  std::vector<std::pair<int, std::uint64_t>> exact, std::vector<std::pair<int, std::uint64_t>> at_least,
                  const std::string& spot_anchor)
{
    const auto f = load.fixture(file);
    Plan p{suite, fixture_checks(f, cap)};
    p.checks.push_back(spot_dims(f, std::move(exact), std::move(at_least), spot_anchor));
    p.checks.back().default_cap = cap;
    return p;
}

Plan serre_plan(Loader& load)
{
    const auto page = load.fixture("serre_g2.alg");
    const auto target = load.fixture("omega_g2.alg");
    Plan p{"serre", {}};
    p.checks.push_back({"serre", anchor_of(*page, "serre", "d5(b5) = a2^2"), 30, [page, target](int n) {
                            const GradedDims h = homology_of_derivation(page->presentation, page->differential, n);
                            return compare_dims(h, Algebra(target->presentation).poincare(n));
                        }});
    p.checks.push_back({"serre-degree-10", "homology of the Serre page has dimension 2 in degree 10", 30,
                        [page](int n) {
                            if (n < 10)
                                return CheckResult::skipped("cap below 10");
                            const GradedDims h = homology_of_derivation(page->presentation, page->differential, 10);
                            if (h[10] != 2)
                                return CheckResult::failed(10, "got " + std::to_string(h[10]) + ", expected 2");
                            return CheckResult::ok();
                        }});
    return p;
}

Plan bss_plan(Loader& load, const std::string& suite, const std::string& file, int cap)
{
    const auto s = load.schedule(file);
    Plan p{suite, {}};
    p.checks.push_back({"e-infinity", "Bockstein spectral sequence of " + s->name + " ends at the unit", cap,
                        [s](int n) {
                            try {
                                const BSSResult r = run_bss(s->schedule(), n);
                                return compare_dims(r.e_infinity, GradedDims::unit(n));
                            } catch (const StageMismatch& e) {
                                return CheckResult::failed(std::nullopt, e.what());
                            }
                        }});
    p.checks.push_back({"page-order", "page labels resolve to increasing page numbers for odd q", 0, [s](int) {
                            for (std::uint64_t q = 3; q < 200; q += 2) {
                                const auto r = bockstein_exponents(q);
                                int prev = 0;
                                for (const auto& [label, stage] : s->stages) {
                                    const int page = resolve_page(label, r);
                                    if (page <= prev)
                                        return CheckResult::failed(std::nullopt, "q = " + std::to_string(q) +
                                                                                     ": page " + label + " = " +
                                                                                     std::to_string(page));
                                    prev = page;
                                }
                            }
                            return CheckResult::ok();
                        }});
    return p;
}

CoalgebraData ring_dual(const Fixture& f, int cap) { return dual_structure_constants(QuotientRing(f.ring, cap), cap); }

CoalgebraData algebra_dual(const Fixture& f, int cap)
{
    Bialgebra b(f.presentation, f.coproduct);
    return coalgebra_of(b, cap);
}

Plan cotor_plan(Loader& load)
{
    const auto di4 = load.fixture("di4.alg");
    const auto omega_di4 = load.fixture("omega_di4.alg");
    const auto bg2q = load.fixture("bg2q.ring");
    const auto bsolq = load.fixture("bsolq.ring");
    const auto t1 = load.fixture("theorem1.alg");
    const auto t2 = load.fixture("theorem2.alg");
    auto compare = [](FixturePtr coalg, FixturePtr target) {
        return [coalg, target](int n) {
            const CoalgebraData c = coalg->is_ring ? ring_dual(*coalg, n + 2) : algebra_dual(*coalg, n + 2);
            return compare_dims(cotor(c, n), Algebra(target->presentation).poincare(n));
        };
    };
    Plan p{"cotor", {}};
    p.checks.push_back({"cotor-di4", "Cotor over H_*(DI(4)) is P[a6]/(a6^2) (x) P[b10,c12,e26]", 28,
                        compare(di4, omega_di4)});
    p.checks.push_back({"cotor-bg2q", "Cotor over H_*(BG2(q)) has the dims of H_*(Omega BG2(q))", 12,
                        compare(bg2q, t1)});
    p.checks.push_back({"cotor-bsolq", "Cotor over H_*(BSol(q)) has the dims of H_*(Omega BSol(q))", 20,
                        compare(bsolq, t2)});
    return p;
}

CheckResult boundary_check(const Fixture& ring, int degree, const std::vector<std::vector<std::string>>& words,
                           int cap)
{
    // A cobar class of cobar degree d needs the coalgebra through d + 2 letters' worth.
    if (cap < degree)
        return CheckResult::skipped("cap below degree " + std::to_string(degree));
    const CoalgebraData c = ring_dual(ring, degree + 2);
    CobarSum w;
    for (const auto& labels : words)
        w.toggle(cobar_word(c, labels));
    const BoundaryVerdict v = is_boundary(w, c);
    if (!v.boundary)
        return CheckResult::failed(degree, format(w, c) + " is not a boundary");
    return CheckResult::ok("d(" + format(v.witness, c) + ")");
}

Plan boundary_plan(Loader& load)
{
    const auto bg2q = load.fixture("bg2q.ring");
    const auto bsolq = load.fixture("bsolq.ring");
    Plan p{"boundary", {}};
    p.checks.push_back({"boundary-bg2q", anchor_of(*bg2q, "boundary", "[y5|y5] + [y3|t7] + [t7|y3] is a boundary"),
                        8, [bg2q](int n) {
                            return boundary_check(*bg2q, 8, {{"y5", "y5"}, {"y3", "t7"}, {"t7", "y3"}}, n);
                        }});
    p.checks.push_back({"boundary-bsolq",
                        anchor_of(*bsolq, "boundary", "[t11|t11] + [u15|t7] + [t7|u15] is a boundary"), 20,
                        [bsolq](int n) {
                            return boundary_check(*bsolq, 20, {{"t11", "t11"}, {"u15", "t7"}, {"t7", "u15"}}, n);
                        }});
    p.checks.push_back({"permanent-bg2q", "[y3], [y5], [t7] are nonzero cycles in degrees 2, 4, 6", 6, [bg2q](int n) {
                            if (n < 6)
                                return CheckResult::skipped("cap below 6");
                            const CoalgebraData c = ring_dual(*bg2q, 8);
                            for (const char* letter : {"y3", "y5", "t7"}) {
                                const CobarSum w(cobar_word(c, {letter}));
                                const int d = cobar_degree(*w.begin(), c);
                                if (!cobar_differential(w, c).is_zero())
                                    return CheckResult::failed(d, std::string("[") + letter + "] is not a cycle");
                                if (is_boundary(w, c).boundary)
                                    return CheckResult::failed(d, std::string("[") + letter + "] is a boundary");
                            }
                            return CheckResult::ok();
                        }});
    p.checks.push_back({"dual-diagonal-bg2q", "reduced diagonal of the dual of y3*t7 contains y3 (x) t7 + t7 (x) y3",
                        10, [bg2q](int n) {
                            if (n < 10)
                                return CheckResult::skipped("cap below 10");
                            const CoalgebraData c = ring_dual(*bg2q, 10);
                            const auto z = c.find("y3*t7");
                            const auto y3 = c.find("y3"), t7 = c.find("t7");
                            if (!z || !y3 || !t7)
                                return CheckResult::failed(10, "y3*t7 is not a standard monomial");
                            const auto& pairs = c.reduced[*z];
                            for (auto want : {std::pair{*y3, *t7}, std::pair{*t7, *y3}})
                                if (std::find(pairs.begin(), pairs.end(), want) == pairs.end())
                                    return CheckResult::failed(10, "missing " + c.labels[want.first] + " (x) " +
                                                                       c.labels[want.second]);
                            return CheckResult::ok();
                        }});
    return p;
}

Plan resolution_plan(Loader& load)
{
    const auto di4 = load.fixture("di4.alg");
    Plan p{"resolution", {}};
    p.checks.push_back({"resolution", "d^2 = 0 and the complex is acyclic", 40,
                        [](int n) { return from_report(verify_resolution(n)); }});
    p.checks.push_back({"ext-vs-cotor", "Ext over H^*(DI(4)) from the resolution equals Cotor over H_*(DI(4))", 28,
                        [di4](int n) { return compare_dims(ext_dims(n), cotor(algebra_dual(*di4, n + 2), n)); }});
    p.checks.push_back({"misread-rule", "the rule with the b family in the tail is not homogeneous", 40, [](int n) {
                            if (n < 2)
                                return CheckResult::skipped("cap below 2");
                            try {
                                build_resolution(n, TRule::b_family);
                            } catch (const DegreeInhomogeneous& e) {
                                return CheckResult::ok(e.what());
                            }
                            return CheckResult::failed(std::nullopt, "misread rule was accepted");
                        }});
    return p;
}

Plan nu2_plan()
{
    Plan p{"nu2", {}};
    p.checks.push_back({"spot-values", "(r2,r4,r6,r14) at q = 3, 5, 7", 0, [](int) {
                            const std::vector<std::pair<std::uint64_t, BocksteinExponents>> want{
                                {3, {3, 4, 3, 3}}, {5, {3, 4, 3, 3}}, {7, {4, 5, 4, 4}}};
                            for (const auto& [q, r] : want)
                                if (bockstein_exponents(q) != r)
                                    return CheckResult::failed(std::nullopt, "q = " + std::to_string(q));
                            return CheckResult::ok();
                        }});
    p.checks.push_back({"identities", "r2 = r6 = r14 = nu2(k) + 3 = r4 - 1 for q = 4k +- 1", 0, [](int) {
                            for (std::uint64_t q = 3; q <= 9999; q += 2)
                                if (!exponent_identities_hold(q))
                                    return CheckResult::failed(std::nullopt, "q = " + std::to_string(q));
                            return CheckResult::ok("q = 3..9999");
                        }});
    return p;
}

Plan fixtures_plan(Loader& load)
{
    Plan p{"fixtures", {}};
    for (const char* file : {"bsu3.ring", "bg2.ring", "bdi4.ring", "su3.alg", "omega_su3.alg", "g2.alg", "di4.alg",
                             "omega_g2.alg", "omega_di4.alg"}) {
        const auto f = load.fixture(file);
        for (auto& c : fixture_checks(f, 40, f->name))
            p.checks.push_back(std::move(c));
    }

    const auto omega_di4 = load.fixture("omega_di4.alg");
    p.checks.push_back({"omega_di4.primitives", "primitives of H_*(Omega DI(4)) in degrees 6, 12, 26", 26,
                        [omega_di4](int n) {
                            Bialgebra b(omega_di4->presentation, omega_di4->coproduct);
                            for (auto [deg, want] : {std::pair{6, 1UL}, std::pair{12, 0UL}, std::pair{26, 1UL}}) {
                                if (deg > n)
                                    continue;
                                if (const auto got = b.primitives_in_degree(deg).size(); got != want)
                                    return CheckResult::failed(deg, "got " + std::to_string(got) + ", expected " +
                                                                        std::to_string(want));
                            }
                            return CheckResult::ok();
                        }});

    const auto omega_su3 = load.fixture("omega_su3.alg");
    p.checks.push_back({"omega_su3.dual-square", "in the dual of H_*(Omega SU(3)) the square of a2* is a4*", 4,
                        [omega_su3](int n) {
                            if (n < 4)
                                return CheckResult::skipped("cap below 4");
                            Bialgebra b(omega_su3->presentation, omega_su3->coproduct);
                            const auto& pres = b.presentation();
                            const Monomial a2 = pres.generator_monomial(pres.index_of("a2"));
                            const Monomial a4 = pres.generator_monomial(pres.index_of("a4"));
                            const auto z = dual_product(b, a2, a2);
                            if (std::find(z.begin(), z.end(), a4) == z.end())
                                return CheckResult::failed(4, "a4 does not pair with a2* a2*");
                            return CheckResult::ok();
                        }});

    const auto bg2q = load.fixture("bg2q.ring");
    p.checks.push_back({"bg2q.degree-10", "standard monomials of degree 10 are y3^2*u4, y3*t7, u4*u6", 10,
                        [bg2q](int n) {
                            if (n < 10)
                                return CheckResult::skipped("cap below 10");
                            const QuotientRing q(bg2q->ring, 10);
                            std::vector<std::string> got;
                            for (const auto& m : q.standard_basis(10))
                                got.push_back(q.ring().format(m));
                            std::sort(got.begin(), got.end());
                            const std::vector<std::string> want{"u4*u6", "y3*t7", "y3^2*u4"};
                            if (got != want) {
                                std::string s;
                                for (const auto& g : got)
                                    s += (s.empty() ? "" : ", ") + g;
                                return CheckResult::failed(10, "basis " + s);
                            }
                            return CheckResult::ok();
                        }});
    return p;
}

const std::vector<std::pair<std::string, std::string>>& corrupt_demos()
{
    static const std::vector<std::pair<std::string, std::string>> demos{
        {"theorem1-corrupt-demo", "corrupt_comm.alg"},
        {"theorem1-corrupt-coproduct-demo", "corrupt_coproduct.alg"},
        {"theorem1-corrupt-steenrod-demo", "corrupt_steenrod.alg"},
    };
    return demos;
}

Plan corrupt_plan(Loader& load, const std::string& suite, const std::string& file)
{
    return {suite, fixture_checks(load.fixture(file), 40)};
}

Plan negative_controls_plan(Loader& load)
{
    Plan p{"negative-controls", {}};
    for (const auto& [suite, file] : corrupt_demos()) {
        const auto f = load.fixture(file);
        const auto checks = std::make_shared<const std::vector<Check>>(fixture_checks(f, 40));
        p.checks.push_back({suite, "fails only at its documented check, degree and witness", 40, [f, checks](int n) {
                                if (f->expect_failures.size() != 1)
                                    return CheckResult::failed(std::nullopt, "fixture must document one failure");
                                const ExpectedFailure& want = f->expect_failures.front();
                                if (want.degree > n)
                                    return CheckResult::skipped("documented degree above cap");
                                std::vector<std::string> failing;
                                CheckResult seen;
                                for (const auto& c : *checks) {
                                    CheckResult r = c.fn(n);
                                    if (r.status == Status::fail) {
                                        failing.push_back(c.name);
                                        if (c.name == want.check)
                                            seen = r;
                                    }
                                }
                                if (failing.size() != 1 || failing.front() != want.check) {
                                    std::string s;
                                    for (const auto& name : failing)
                                        s += (s.empty() ? "" : ", ") + name;
                                    return CheckResult::failed(std::nullopt, "failing checks: " + (s.empty() ? "none" : s));
                                }
                                if (seen.degree != want.degree || seen.witness.find(want.witness) == std::string::npos)
                                    return CheckResult::failed(seen.degree, "unexpected witness: " + seen.witness);
                                return CheckResult::ok(want.check + " at degree " + std::to_string(want.degree) + ": " +
                                                       seen.witness);
                            }});
    }
    return p;
}

std::vector<Plan> plans_for(const std::string& name, Loader& load, const SuiteOptions& opt)
{
    auto primary = [&](const std::string& file) { return opt.fixture.empty() ? file : opt.fixture; };
    if (name == "theorem1")
        return {theorem_plan(load, name, primary("theorem1.alg"), 40, {{5, 2}, {8, 3}, {10, 4}}, {},
                             "PBW dims 2, 3, 4 in degrees 5, 8, 10")};
    if (name == "theorem2")
        return {theorem_plan(load, name, primary("theorem2.alg"), 48, {{13, 2}, {14, 1}}, {{26, 2}},
                             "PBW dims 2, 1 in degrees 13, 14 and at least 2 in degree 26")};
    if (name == "serre")
        return {serre_plan(load)};
    if (name == "bss-g2")
        return {bss_plan(load, name, primary("bss_g2.bss"), 40)};
    if (name == "bss-sol")
        return {bss_plan(load, name, primary("bss_sol.bss"), 48)};
    if (name == "cotor")
        return {cotor_plan(load)};
    if (name == "boundary")
        return {boundary_plan(load)};
    if (name == "resolution")
        return {resolution_plan(load)};
    if (name == "nu2")
        return {nu2_plan()};
    if (name == "fixtures")
        return {fixtures_plan(load)};
    if (name == "negative-controls")
        return {negative_controls_plan(load)};
    if (name == "fixture") {
        if (opt.fixture.empty())
            throw UnknownSuite("suite 'fixture' needs a fixture path");
        if (std::filesystem::path(opt.fixture).extension() == ".bss")
            return {bss_plan(load, name, opt.fixture, 40)};
        return {{name, fixture_checks(load.fixture(opt.fixture), 40)}};
    }
    for (const auto& [suite, file] : corrupt_demos())
        if (name == suite)
            return {corrupt_plan(load, suite, primary(file))};
    if (name == "all") {
        std::vector<Plan> out;
        for (const char* s : {"theorem1", "theorem2", "serre", "bss-g2", "bss-sol", "cotor", "boundary", "resolution",
                              "nu2", "fixtures", "negative-controls"})
            for (auto& p : plans_for(s, load, SuiteOptions{opt.cap, opt.jobs, opt.fixture_dir, {}}))
                out.push_back(std::move(p));
        return out;
    }
    throw UnknownSuite("unknown suite '" + name + "'");
}

double millis_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

const char* to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
    }
    return "?";
}

bool SuiteReport::pass() const
{
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckOutcome& c) { return c.result.status == Status::fail; });
}

std::string default_fixture_dir()
{
    if (const char* env = std::getenv("LOOPHOM_FIXTURES"); env && *env)
        return env;
    return LOOPHOM_FIXTURE_DIR;
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> names{"theorem1", "theorem2", "serre", "bss-g2", "bss-sol", "cotor", "boundary",
                                   "resolution", "nu2", "fixtures", "negative-controls", "fixture", "all"};
    for (const auto& [suite, file] : corrupt_demos())
        names.push_back(suite);
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options)
{
    const auto t0 = std::chrono::steady_clock::now();
    Loader load(options.fixture_dir.empty() ? default_fixture_dir() : options.fixture_dir);
    const std::vector<Plan> plans = plans_for(name, load, options);

    struct Job {
        const Plan* plan;
        const Check* check;
    };
    std::vector<Job> jobs;
    for (const auto& p : plans)
        for (const auto& c : p.checks)
            jobs.push_back({&p, &c});

    SuiteReport report{name, std::vector<CheckOutcome>(jobs.size()), 0};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            const auto& [plan, check] = jobs[i];
            const int cap = options.cap < 0 ? check->default_cap : options.cap;
            const auto start = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = check->fn(cap);
            } catch (const std::exception& e) {
                r = CheckResult::failed(std::nullopt, std::string("exception: ") + e.what());
            }
            report.checks[i] = {plan->suite, check->name, check->anchor, std::move(r), millis_since(start)};
        }
    };
    const std::size_t n = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.jobs, 1)), 1, jobs.size() ? jobs.size() : 1);
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < n; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    report.millis = millis_since(t0);
    return report;
}

std::string format_text(const SuiteReport& report)
{
    std::ostringstream out;
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& c : report.checks) {
        const auto& r = c.result;
        out << (r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "SKIP") << "  " << c.suite << '/'
            << c.check;
        if (r.degree)
            out << "  degree " << *r.degree;
        if (!r.witness.empty())
            out << "  " << r.witness;
        out << "  (" << static_cast<long long>(c.millis) << " ms)\n";
        if (r.status == Status::fail)
            out << "      claim: " << c.anchor << '\n';
        (r.status == Status::pass ? passed : r.status == Status::fail ? failed : skipped)++;
    }
    out << report.suite << ": " << passed << " passed, " << failed << " failed, " << skipped << " skipped in "
        << static_cast<long long>(report.millis) << " ms\n";
    return out.str();
}

std::string format_machine(const SuiteReport& report)
{
    std::ostringstream out;
    for (const auto& c : report.checks) {
        nlohmann::json j{{"suite", c.suite},
                         {"check", c.check},
                         {"anchor", c.anchor},
                         {"status", to_string(c.result.status)},
                         {"degree", c.result.degree ? nlohmann::json(*c.result.degree) : nlohmann::json(nullptr)},
                         {"witness", c.result.witness},
                         {"millis", c.millis}};
        out << j.dump() << '\n';
    }
    return out.str();
}

}  // namespace loophom
