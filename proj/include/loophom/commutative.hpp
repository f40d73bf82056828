#pragma once
// Commutative graded GF(2) quotient rings via degree-truncated Groebner bases.
//
// Monomial order: weighted degree first, then lexicographic in the declared
// variable order (the first listed variable is the most significant).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loophom/algebra.hpp"
#include "loophom/graded_dims.hpp"

namespace loophom {

class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct VariableSpec {
    std::string name;
    int degree = 1;
    friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

/// Sq^k(var) = value on the cohomology side; kept as metadata.
struct CohomologySquare {
    int k = 1;
    std::size_t variable = 0;
    Element value;
    friend bool operator==(const CohomologySquare&, const CohomologySquare&) = default;
};

class CommutativeRing {
public:
    CommutativeRing() = default;
    CommutativeRing(std::string name, std::vector<VariableSpec> variables);

    const std::string& name() const { return name_; }
    const std::vector<VariableSpec>& variables() const { return vars_; }
    const std::vector<Element>& relations() const { return relations_; }
    const std::vector<CohomologySquare>& squares() const { return squares_; }

    std::size_t index_of(const std::string& name) const;
    std::optional<std::size_t> find(const std::string& name) const;
    int degree(const Monomial& m) const;
    std::optional<int> degree(const Element& e) const;  // throws InhomogeneousRelation

    void add_relation(Element relation);
    void add_square(CohomologySquare sq);  // degree-checked
    // Same ring with the variables listed in a different order.
    CommutativeRing reordered(const std::vector<std::string>& order) const;

    std::string format(const Monomial& m) const;
    std::string format(const Element& e) const;

    friend bool operator==(const CommutativeRing&, const CommutativeRing&) = default;

private:
    std::string name_;
    std::vector<VariableSpec> vars_;
    std::vector<Element> relations_;
    std::vector<CohomologySquare> squares_;
};

/// The quotient ring through a fixed degree cap.
class QuotientRing {
public:
    QuotientRing(CommutativeRing ring, int cap);

    const CommutativeRing& ring() const { return ring_; }
    int cap() const { return cap_; }
    const std::vector<Element>& groebner_basis() const { return basis_; }
    const std::vector<Monomial>& leading_terms() const { return leads_; }

    // Standard monomials of degree n, sorted descending in the monomial order.
    std::vector<Monomial> standard_basis(int n) const;
    GradedDims dims() const;

    Element reduce(Element p) const;
    Element multiply(const Monomial& a, const Monomial& b) const;  // reduced

    bool less(const Monomial& a, const Monomial& b) const;  // monomial order
    Monomial leading(const Element& p) const;

private:
    void check(int n) const;
    void compute();

    CommutativeRing ring_;
    int cap_;
    std::vector<Element> basis_;
    std::vector<Monomial> leads_;
};

std::vector<Monomial> commutative_quotient_basis(const QuotientRing& q, int n);

}  // namespace loophom
