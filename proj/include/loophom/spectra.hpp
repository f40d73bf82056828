#pragma once
// Homology of derivation differentials on presented algebras, and the
// Bockstein spectral sequence runner over explicit page schedules.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "loophom/algebra.hpp"
#include "loophom/graded_dims.hpp"

namespace loophom {

class DifferentialNotSquareZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RelationNotPreserved : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StageMismatch : public std::runtime_error {
public:
    StageMismatch(std::size_t stage, int degree, const std::string& what)
        : std::runtime_error(what), stage_(stage), degree_(degree)
    {
    }
    std::size_t stage() const { return stage_; }
    int degree() const { return degree_; }

private:
    std::size_t stage_;
    int degree_;
};

/// Values d(g) on generators, each of degree deg(g) - 1; zero when absent.
class DerivationSpec {
public:
    void set(const Presentation& pres, std::size_t generator, Element value);
    const Element& value(std::size_t generator) const;
    const std::map<std::size_t, Element>& values() const { return values_; }

    friend bool operator==(const DerivationSpec&, const DerivationSpec&) = default;

private:
    std::map<std::size_t, Element> values_;
    Element zero_;
};

/// A presented algebra with a derivation extended by the Leibniz rule.
class DifferentialAlgebra {
public:
    DifferentialAlgebra(Presentation pres, DerivationSpec d);

    Algebra& algebra() { return algebra_; }
    const Presentation& presentation() const { return algebra_.presentation(); }

    const Element& d(const Monomial& m);
    Element d(const Element& e);

    // Throws RelationNotPreserved or DifferentialNotSquareZero.
    void validate(int cap);
    GradedDims homology(int cap);

private:
    Element leibniz_word(const std::vector<std::size_t>& word);

    Algebra algebra_;
    DerivationSpec spec_;
    std::map<Monomial, Element> cache_;
};

GradedDims homology_of_derivation(const Presentation& pres, const DerivationSpec& d, int cap);

struct BSSStage {
    std::string label;  // page label, e.g. "1", "r2", "r4-1"
    Presentation page;
    DerivationSpec differential;
};

struct BSSSchedule {
    std::string name;
    std::vector<BSSStage> stages;
};

struct BSSStageResult {
    std::string label;
    GradedDims page_dims;
    GradedDims homology;
};

struct BSSResult {
    std::vector<BSSStageResult> stages;
    GradedDims e_infinity;
};

/// Runs every stage; throws StageMismatch when a stage's homology differs from
/// the next stage's page.
BSSResult run_bss(const BSSSchedule& schedule, int cap);

}  // namespace loophom
