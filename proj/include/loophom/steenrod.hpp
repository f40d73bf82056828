#pragma once
// Mod-2 Steenrod squares: admissible-basis reduction and the dual action
// Sq^k_* on a presented Hopf algebra.
//
// Homology convention: the cohomology composite Sq^a Sq^b acts on homology as
// Sq^b_* o Sq^a_*, i.e. Sq^a_* is applied first.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "loophom/algebra.hpp"
#include "loophom/commutative.hpp"
#include "loophom/hopf.hpp"
#include "loophom/report.hpp"

namespace loophom {

/// Sq^{i_1} Sq^{i_2} ... Sq^{i_k} in cohomology order; entries are positive.
using SqMonomial = std::vector<int>;
using SqSum = std::set<SqMonomial>;

bool is_admissible(const SqMonomial& w);
bool binomial_odd(int n, int k);

/// Rewrites a composite into admissible monomials by the Adem relations.
/// Throws CapExceeded when the total degree exceeds cap.
SqSum adem_reduce(const SqMonomial& word, int cap);

/// Explicit values Sq^k_*(g).  Unstated power-of-two squares are zero; the
/// others are derived from lower squares through the Adem relation.
class SteenrodSpec {
public:
    void set(const Presentation& pres, int k, std::size_t generator, Element value);
    const std::map<std::pair<int, std::size_t>, Element>& values() const { return values_; }
    const Element* find(int k, std::size_t generator) const;

    friend bool operator==(const SteenrodSpec&, const SteenrodSpec&) = default;

private:
    std::map<std::pair<int, std::size_t>, Element> values_;
};

/// A presented bialgebra with a dual Steenrod action.  Holds caches; one
/// instance per thread.
class SteenrodModule {
public:
    SteenrodModule(Presentation pres, CoproductSpec cop, SteenrodSpec spec);

    const Presentation& presentation() const { return bialgebra_.presentation(); }
    Bialgebra& bialgebra() { return bialgebra_; }
    const SteenrodSpec& spec() const { return spec_; }

    // Sq^k_* on a generator, including derived values.
    const Element& generator_value(int k, std::size_t g);
    // Cartan extension, evaluated left to right on the PBW word.
    const Element& act(int k, const Monomial& m);
    Element act(int k, const Element& e);

    // (a) relations, (b) Adem relations, (c) coproduct compatibility.
    CheckReport verify(int cap);

private:
    Element cartan_product(int k, const std::vector<std::size_t>& word);

    Bialgebra bialgebra_;
    SteenrodSpec spec_;
    std::map<std::pair<int, std::size_t>, Element> gen_cache_;
    std::map<std::pair<int, Monomial>, Element> act_cache_;
    Element zero_;
};

/// Degree consistency of the cohomology squares stored on a commutative ring.
CheckReport verify_cohomology_squares(const CommutativeRing& ring);

}  // namespace loophom
