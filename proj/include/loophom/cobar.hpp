#pragma once
// Cobar complex of a connected coalgebra over GF(2) and its homology (Cotor).
//
// A word [c_1|...|c_k] has degree sum(deg c_i - 1).  The differential splits one
// letter at a time by its reduced coproduct, lowering degree by one.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "loophom/graded_dims.hpp"
#include "loophom/hopf.hpp"

namespace loophom {

using CobarWord = std::vector<std::size_t>;

class CobarSum {
public:
    CobarSum() = default;
    explicit CobarSum(CobarWord w) { terms_.insert(std::move(w)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void toggle(const CobarWord& w)
    {
        if (auto it = terms_.find(w); it != terms_.end())
            terms_.erase(it);
        else
            terms_.insert(w);
    }
    CobarSum& operator+=(const CobarSum& o)
    {
        for (const auto& w : o.terms_)
            toggle(w);
        return *this;
    }
    friend CobarSum operator+(CobarSum a, const CobarSum& b) { return a += b; }
    friend bool operator==(const CobarSum&, const CobarSum&) = default;
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    std::set<CobarWord> terms_;
};

class UnknownLetter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotACycle : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

int cobar_degree(const CobarWord& w, const CoalgebraData& c);
// Word spelled by coalgebra labels; throws UnknownLetter.
CobarWord cobar_word(const CoalgebraData& c, const std::vector<std::string>& labels);
std::string format(const CobarSum& s, const CoalgebraData& c);

CobarSum cobar_differential(const CobarSum& w, const CoalgebraData& c);

// All words of total degree n.
std::vector<CobarWord> cobar_basis(const CoalgebraData& c, int n);

/// Homology dims through cap; needs the coalgebra through cap + 2.
GradedDims cotor(const CoalgebraData& c, int cap);

struct BoundaryVerdict {
    bool boundary = false;
    CobarSum witness;  // d(witness) = input when boundary
};

BoundaryVerdict is_boundary(const CobarSum& w, const CoalgebraData& c);

}  // namespace loophom
