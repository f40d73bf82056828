#pragma once
// Coproducts on presented algebras, bialgebra checks, primitives, and
// coalgebras obtained by degreewise dualization.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "loophom/algebra.hpp"
#include "loophom/commutative.hpp"
#include "loophom/report.hpp"

namespace loophom {

using MonomialPair = std::pair<Monomial, Monomial>;

/// A GF(2) sum of elementary tensors m1 (x) m2.
class Tensor {
public:
    Tensor() = default;
    Tensor(Monomial a, Monomial b) { terms_.emplace(std::move(a), std::move(b)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const MonomialPair& p) const { return terms_.count(p) != 0; }
    void toggle(const MonomialPair& p)
    {
        if (auto it = terms_.find(p); it != terms_.end())
            terms_.erase(it);
        else
            terms_.insert(p);
    }
    Tensor& operator+=(const Tensor& o)
    {
        for (const auto& p : o.terms_)
            toggle(p);
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend bool operator==(const Tensor&, const Tensor&) = default;
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    std::set<MonomialPair> terms_;
};

/// Reduced coproduct values on generators; absent generators are primitive.
class CoproductSpec {
public:
    CoproductSpec() = default;
    explicit CoproductSpec(const Presentation& pres) : gens_(pres.size()) {}

    // Validates normal form, positive degrees on both sides, and degree balance.
    void set(const Presentation& pres, std::size_t generator, Tensor reduced);
    const Tensor& reduced(std::size_t generator) const;
    const std::map<std::size_t, Tensor>& values() const { return values_; }

    friend bool operator==(const CoproductSpec&, const CoproductSpec&) = default;

private:
    std::size_t gens_ = 0;
    std::map<std::size_t, Tensor> values_;
    Tensor zero_;
};

/// A presented algebra together with a coproduct, extended multiplicatively.
/// Holds caches; use one instance per thread.
class Bialgebra {
public:
    Bialgebra(Presentation pres, CoproductSpec cop);

    const Presentation& presentation() const { return algebra_.presentation(); }
    const CoproductSpec& spec() const { return cop_; }
    Algebra& algebra() { return algebra_; }

    const Tensor& coproduct(const Monomial& m);
    Tensor coproduct(const Element& e);
    Tensor reduced_coproduct(const Element& e);
    // (a (x) b)(c (x) d) = ac (x) bd, normalized in each factor.
    Tensor multiply(const Tensor& x, const Tensor& y);

    std::vector<Element> primitives_in_degree(int n);

    // (a) relations respected, (b) coassociativity, (c) counit; through cap.
    CheckReport verify(int cap);

    std::string format(const Tensor& t) const;

private:
    Algebra algebra_;
    CoproductSpec cop_;
    std::map<Monomial, Tensor> cache_;
};

/// Connected coalgebra with an explicit degreewise basis (positive degrees only;
/// the unit is implicit).  reduced[i] lists the pairs (j,k) in the reduced coproduct.
struct CoalgebraData {
    std::string name;
    int cap = 0;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> reduced;

    std::size_t size() const { return labels.size(); }
    std::optional<std::size_t> find(const std::string& label) const;
    std::vector<std::size_t> in_degree(int n) const;
    std::size_t add(std::string label, int degree);

    // Checks bihomogeneity and (dbar (x) 1) dbar = (1 (x) dbar) dbar; throws on failure.
    void validate() const;
};

class CoassociativityFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The graded dual of a commutative quotient ring through cap.  The dual of a
/// standard monomial m is labelled by m's own spelling.
CoalgebraData dual_structure_constants(const QuotientRing& ring, int cap);

/// The coalgebra underlying a presented bialgebra, on its PBW basis.
CoalgebraData coalgebra_of(Bialgebra& b, int cap);

/// Product in the graded dual of a presented bialgebra: returns the basis
/// monomials z of degree |x|+|y| with x (x) y occurring in coproduct(z).
std::vector<Monomial> dual_product(Bialgebra& b, const Monomial& x, const Monomial& y);

}  // namespace loophom
