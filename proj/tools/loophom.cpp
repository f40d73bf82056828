// loophom: command-line front end for the verification suites.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "loophom/arith.hpp"
#include "loophom/cobar.hpp"
#include "loophom/fixtures.hpp"
#include "loophom/suites.hpp"

namespace {

int cmd_verify(const std::string& suite, int maxdeg, int jobs, const std::string& format, const std::string& fixture)
{
    loophom::SuiteOptions opt;
    opt.cap = maxdeg;
    opt.jobs = jobs;
    opt.fixture = fixture;
    const auto report = loophom::run_suite(suite.empty() ? "fixture" : suite, opt);
    std::cout << (format == "machine" ? loophom::format_machine(report) : loophom::format_text(report));
    return report.pass() ? 0 : 1;
}

int cmd_cotor(const std::string& path, int maxdeg)
{
    const loophom::Fixture f = loophom::load_fixture_file(path);
    loophom::CoalgebraData c;
    if (f.is_ring) {
        c = loophom::dual_structure_constants(loophom::QuotientRing(f.ring, maxdeg + 2), maxdeg + 2);
    } else {
        loophom::Bialgebra b(f.presentation, f.coproduct);
        c = loophom::coalgebra_of(b, maxdeg + 2);
    }
    const auto dims = loophom::cotor(c, maxdeg);
    std::cout << "cotor " << f.name << " through degree " << maxdeg << '\n' << dims.to_string() << '\n';
    return 0;
}

int cmd_nu2(long long q)
{
    if (q < 0)
        throw loophom::EvenInput("q must be a positive odd integer");
    const auto r = loophom::bockstein_exponents(static_cast<std::uint64_t>(q));
    const bool ok = loophom::exponent_identities_hold(static_cast<std::uint64_t>(q));
    std::cout << "q = " << q << ": r2 = " << r.r2 << ", r4 = " << r.r4 << ", r6 = " << r.r6 << ", r14 = " << r.r14
              << '\n';
    std::cout << "pages:";
    for (const char* label : {"1", "r2", "r2+1", "r2+2", "r4-1", "r4", "r4+1", "r4+2"})
        std::cout << ' ' << label << '=' << loophom::resolve_page(label, r);
    std::cout << "\nidentities " << (ok ? "hold" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact mod-2 verification of loop space homology computations"};
    app.require_subcommand(1);

    std::string suite, format = "text", fixture, coalgebra;
    int maxdeg = -1, jobs = 1;
    long long q = 0;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name");
    verify->add_option("--maxdeg", maxdeg, "degree cap (default: per check)");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}));
    verify->add_option("--fixture", fixture, "fixture file to verify");
    verify->add_flag_callback(
        "--list", [] {
            for (const auto& s : loophom::suite_names())
                std::cout << s << '\n';
            std::exit(0);
        },
        "list suites");

    auto* cot = app.add_subcommand("cotor", "Cotor dimensions of a coalgebra");
    cot->add_option("--coalgebra", coalgebra, "algebra or ring fixture")->required();
    cot->add_option("--maxdeg", maxdeg, "degree cap")->required()->check(CLI::NonNegativeNumber);

    auto* nu = app.add_subcommand("nu2", "Bockstein exponents of q");
    nu->add_option("--q", q, "odd integer at least 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            if (suite.empty() && fixture.empty()) {
                std::cerr << "verify needs --suite or --fixture\n";
                return 2;
            }
            return cmd_verify(suite, maxdeg, jobs, format, fixture);
        }
        if (*cot)
            return cmd_cotor(coalgebra, maxdeg);
        if (*nu)
            return cmd_nu2(q);
    } catch (const loophom::FixtureError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const loophom::InhomogeneousRelation& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const loophom::UnknownGenerator& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const loophom::UnknownSuite& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const loophom::EvenInput& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
