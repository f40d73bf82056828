#pragma once
// Named verification suites over the shipped fixtures, run on a worker pool.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loophom {

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Status { pass, fail, skip };

const char* to_string(Status s);

struct CheckResult {
    Status status = Status::pass;
    std::optional<int> degree;  // first failing degree
    std::string witness;

    static CheckResult ok(std::string note = {}) { return {Status::pass, std::nullopt, std::move(note)}; }
    static CheckResult skipped(std::string why) { return {Status::skip, std::nullopt, std::move(why)}; }
    static CheckResult failed(std::optional<int> degree, std::string witness)
    {
        return {Status::fail, degree, std::move(witness)};
    }
};

struct CheckOutcome {
    std::string suite;
    std::string check;
    std::string anchor;
    CheckResult result;
    double millis = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckOutcome> checks;
    double millis = 0;

    bool pass() const;
};

struct SuiteOptions {
    int cap = -1;  // negative: every check uses its own default cap
    int jobs = 1;
    std::string fixture_dir;  // empty: default_fixture_dir()
    std::string fixture;      // replaces the suite's primary fixture file
};

/// LOOPHOM_FIXTURES from the environment, else the compiled-in directory.
std::string default_fixture_dir();

std::vector<std::string> suite_names();

/// Throws UnknownSuite, or FixtureError when a fixture fails to load.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

std::string format_text(const SuiteReport& report);
// One JSON object per line.
std::string format_machine(const SuiteReport& report);

}  // namespace loophom
