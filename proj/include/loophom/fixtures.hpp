#pragma once
// Line-oriented fixture files describing presented Hopf algebras, commutative
// rings and Bockstein schedules.
//
//   algebra <name>                       | ring <name>
//   generator <name> deg <d> [poly | nil <h>]
//   comm <g> <h> = <element>
//   coproduct <g> = <m> (x) <m> [+ ...]
//   steenrod <k> <g> = <element>           homology squares Sq^k_*
//   square <k> <v> = <poly>                cohomology squares on a ring
//   relation <poly>                        ring relation (= 0)
//   differential <g> = <element>  |  differential steenrod <k>
//   expect dims <d0> <d1> ...  |  expect product <factor> (x) <factor> ...
//   expect unit
//   expect failure <check> <degree> <witness text>
//   anchor <check> <text>
//   include <relative path>
// Schedules: "schedule <name>" followed by "stage <label>" blocks, each block
// holding ordinary fixture lines.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loophom/algebra.hpp"
#include "loophom/commutative.hpp"
#include "loophom/graded_dims.hpp"
#include "loophom/hopf.hpp"
#include "loophom/spectra.hpp"
#include "loophom/steenrod.hpp"

namespace loophom {

class FixtureError : public std::runtime_error {
public:
    FixtureError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class ParseError : public FixtureError {
public:
    using FixtureError::FixtureError;
};

class UnknownSymbol : public FixtureError {
public:
    using FixtureError::FixtureError;
};

class DegreeMismatch : public FixtureError {
public:
    using FixtureError::FixtureError;
};

struct ExpectedFailure {
    std::string check;
    int degree = 0;
    std::string witness;
    friend bool operator==(const ExpectedFailure&, const ExpectedFailure&) = default;
};

struct Fixture {
    std::string name;
    bool is_ring = false;
    Presentation presentation;
    CoproductSpec coproduct;
    SteenrodSpec steenrod;
    DerivationSpec differential;
    std::optional<int> differential_square;  // d = Sq^k_*
    CommutativeRing ring;
    std::optional<GradedDims> expect_dims;      // prefix of the Poincare series
    std::string expect_product;                 // factor expression, empty if none
    bool expect_unit = false;
    std::vector<ExpectedFailure> expect_failures;
    std::map<std::string, std::string> anchors;

    // The derivation requested by the file, resolving "differential steenrod k".
    DerivationSpec effective_differential() const;

    friend bool operator==(const Fixture&, const Fixture&) = default;
};

struct ScheduleFile {
    std::string name;
    std::vector<std::pair<std::string, Fixture>> stages;
    BSSSchedule schedule() const;
};

/// Parses fixture text; `base_dir` resolves include lines.
Fixture load_fixture(const std::string& text, const std::string& base_dir = ".");
Fixture load_fixture_file(const std::string& path);
ScheduleFile load_schedule(const std::string& text, const std::string& base_dir = ".");
ScheduleFile load_schedule_file(const std::string& path);

std::string serialize(const Fixture& f);

/// Poincare series of a tensor product such as "P[a2]/(a2^2) (x) P[a4,b10] (x) E[x3]".
/// Each generator's degree is the trailing integer of its name.  Throws ParseError.
GradedDims product_series(const std::string& expression, int cap);

}  // namespace loophom
