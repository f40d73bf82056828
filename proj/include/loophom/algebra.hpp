#pragma once
// Finitely presented graded algebras over GF(2) given by ordered generators,
// nilpotence heights and a commutator table.  Every element is kept in the
// PBW basis of ordered monomials g_1^e_1 ... g_k^e_k with e_i < height_i.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loophom/graded_dims.hpp"

namespace loophom {

/// Exponent vector indexed by generator position.
using Monomial = std::vector<std::uint16_t>;

/// A GF(2) linear combination of monomials.
class Element {
public:
    Element() = default;
    explicit Element(Monomial m) { terms_.insert(std::move(m)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::set<Monomial>& terms() const { return terms_; }
    bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

    void toggle(const Monomial& m)
    {
        if (auto it = terms_.find(m); it != terms_.end())
            terms_.erase(it);
        else
            terms_.insert(m);
    }
    Element& operator+=(const Element& other)
    {
        for (const auto& m : other.terms_)
            toggle(m);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend bool operator==(const Element&, const Element&) = default;

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    std::set<Monomial> terms_;
};

struct GeneratorSpec {
    std::string name;
    int degree = 1;
    int height = 0;  // 0 means infinite (polynomial); otherwise g^height = 0

    bool polynomial() const { return height == 0; }
    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

class UnknownGenerator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InhomogeneousRelation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RewriteDiverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered generators plus the table c_ij = g_i g_j + g_j g_i (i < j).
class Presentation {
public:
    Presentation() = default;
    // Generators are stably sorted by degree; commutator keys use names.
    Presentation(std::string name, std::vector<GeneratorSpec> generators);

    const std::string& name() const { return name_; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const GeneratorSpec& generator(std::size_t i) const { return gens_.at(i); }

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;  // throws UnknownGenerator

    // [a, b] = value, in either argument order.  Validates homogeneity.
    void set_commutator(std::size_t a, std::size_t b, Element value);
    const Element& commutator(std::size_t i, std::size_t j) const;  // i != j
    const std::map<std::pair<std::size_t, std::size_t>, Element>& commutators() const { return comms_; }

    int degree(const Monomial& m) const;
    // Degree of a homogeneous element; nullopt for zero; throws when inhomogeneous.
    std::optional<int> degree(const Element& e) const;

    Monomial unit() const { return Monomial(gens_.size(), 0); }
    Monomial generator_monomial(std::size_t i) const;
    bool is_normal(const Monomial& m) const;

    // The word g_{i_1} g_{i_2} ... spelled by a monomial, in order.
    std::vector<std::size_t> word_of(const Monomial& m) const;

    std::string format(const Monomial& m) const;
    std::string format(const Element& e) const;
    std::string format_word(const std::vector<std::size_t>& word) const;

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    std::string name_;
    std::vector<GeneratorSpec> gens_;
    std::map<std::pair<std::size_t, std::size_t>, Element> comms_;
    Element zero_;
};

struct ConfluenceFailure {
    std::vector<std::size_t> word;  // overlap word, left to right
    int degree = 0;
    Element difference;  // left-first result minus right-first result
};

struct ConfluenceReport {
    std::size_t overlaps_checked = 0;
    std::vector<ConfluenceFailure> failures;  // ascending degree
    bool pass() const { return failures.empty(); }
};

/// Rewriting engine for a fixed presentation.  Holds memo tables, so one
/// instance should not be shared between threads; the Presentation may be.
class Algebra {
public:
    explicit Algebra(Presentation pres);

    const Presentation& presentation() const { return pres_; }

    // m * g_i reduced to normal form.
    const Element& times_generator(const Monomial& m, std::size_t i);
    Element multiply(const Monomial& a, const Monomial& b);
    Element multiply(const Element& a, const Element& b);
    Element multiply(const Element& a, const Monomial& b);

    // Normal form of a product of generators, evaluated left to right.
    Element normal_form(const std::vector<std::size_t>& word);
    Element normal_form(const std::vector<std::string>& names);

    std::vector<Monomial> basis_in_degree(int n) const;
    std::map<Monomial, std::size_t> basis_index(int n) const;
    GradedDims poincare(int cap) const;

    ConfluenceReport check_confluence(int cap);

private:
    Element word_times(Element e, const std::vector<std::size_t>& word);

    Presentation pres_;
    std::map<std::pair<Monomial, std::size_t>, Element> mult_cache_;
    int depth_ = 0;
};

}  // namespace loophom
