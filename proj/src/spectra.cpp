#include "loophom/spectra.hpp"

#include "loophom/gf2.hpp"

namespace loophom {

void DerivationSpec::set(const Presentation& pres, std::size_t generator, Element value)
{
    if (generator >= pres.size())
        throw UnknownGenerator("differential on unknown generator");
    const int expected = pres.generator(generator).degree - 1;
    for (const auto& m : value) {
        if (!pres.is_normal(m))
            throw std::invalid_argument("differential value is not in normal form");
        if (pres.degree(m) != expected)
            throw InhomogeneousRelation("d(" + pres.generator(generator).name + ") must have degree " +
                                        std::to_string(expected));
    }
    if (value.is_zero())
        values_.erase(generator);
    else
        values_[generator] = std::move(value);
}

const Element& DerivationSpec::value(std::size_t generator) const
{
    auto it = values_.find(generator);
    return it == values_.end() ? zero_ : it->second;
}

DifferentialAlgebra::DifferentialAlgebra(Presentation pres, DerivationSpec d)
    : algebra_(std::move(pres)), spec_(std::move(d))
{
}

const Element& DifferentialAlgebra::d(const Monomial& m)
{
    if (auto it = cache_.find(m); it != cache_.end())
        return it->second;
    Element result;
    std::size_t g = m.size();
    while (g-- > 0 && !m[g]) {
    }
    if (g < m.size()) {
        // d(p g) = d(p) g + p d(g)
        Monomial p = m;
        --p[g];
        const Element dp = d(p);
        if (!dp.is_zero())
            result += algebra_.multiply(dp, presentation().generator_monomial(g));
        const Element& dg = spec_.value(g);
        if (!dg.is_zero())
            result += algebra_.multiply(Element(p), dg);
    }
    return cache_.emplace(m, std::move(result)).first->second;
}

Element DifferentialAlgebra::d(const Element& e)
{
    Element out;
    for (const auto& m : e)
        out += d(m);
    return out;
}

Element DifferentialAlgebra::leibniz_word(const std::vector<std::size_t>& word)
{
    const auto& pres = presentation();
    Element out;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        const Element& dg = spec_.value(word[pos]);
        if (dg.is_zero())
            continue;
        Element term(pres.unit());
        for (std::size_t q = 0; q < word.size(); ++q)
            term = q == pos ? algebra_.multiply(term, dg) : algebra_.multiply(term, pres.generator_monomial(word[q]));
        out += term;
    }
    return out;
}

void DifferentialAlgebra::validate(int cap)
{
    const auto& pres = presentation();
    for (std::size_t i = 0; i < pres.size(); ++i) {
        const auto& gi = pres.generator(i);
        for (std::size_t j = i + 1; j < pres.size(); ++j) {
            if (gi.degree + pres.generator(j).degree > cap)
                continue;
            const Element lhs = leibniz_word({i, j}) + leibniz_word({j, i});
            const Element rhs = d(pres.commutator(i, j));
            if (lhs != rhs)
                throw RelationNotPreserved("d on [" + gi.name + "," + pres.generator(j).name + "]: " + pres.format(lhs) +
                                           " vs " + pres.format(rhs));
        }
        if (gi.height && gi.height * gi.degree <= cap + 1) {
            const Element v = leibniz_word(std::vector<std::size_t>(static_cast<std::size_t>(gi.height), i));
            if (!v.is_zero())
                throw RelationNotPreserved("d(" + gi.name + "^" + std::to_string(gi.height) + ") = " + pres.format(v));
        }
        const Element dd = d(spec_.value(i));
        if (!dd.is_zero())
            throw DifferentialNotSquareZero("d(d(" + gi.name + ")) = " + pres.format(dd));
    }
}

GradedDims DifferentialAlgebra::homology(int cap)
{
    validate(cap);
    std::vector<std::vector<Monomial>> basis;
    std::vector<std::map<Monomial, std::size_t>> index;
    for (int n = 0; n <= cap + 1; ++n) {
        basis.push_back(algebra_.basis_in_degree(n));
        index.push_back(algebra_.basis_index(n));
    }
    // matrix of d : C_n -> C_{n-1}
    auto matrix = [&](int n) {
        const std::size_t rows = n == 0 ? 0 : basis[n - 1].size();
        gf2::Matrix::Builder b(rows, basis[n].size());
        if (n > 0)
            for (std::size_t c = 0; c < basis[n].size(); ++c)
                for (const auto& t : d(basis[n][c]))
                    b.flip(index[n - 1].at(t), c);
        return std::move(b).build();
    };
    GradedDims out(cap);
    gf2::Matrix d_out = matrix(0);
    for (int n = 0; n <= cap; ++n) {
        gf2::Matrix d_in = matrix(n + 1);
        try {
            out[n] = gf2::homology_dim(d_out, d_in);
        } catch (const gf2::CompositionNotZero&) {
            throw DifferentialNotSquareZero("d^2 != 0 in degree " + std::to_string(n + 1));
        }
        d_out = std::move(d_in);
    }
    return out;
}

GradedDims homology_of_derivation(const Presentation& pres, const DerivationSpec& d, int cap)
{
    DifferentialAlgebra da(pres, d);
    return da.homology(cap);
}

BSSResult run_bss(const BSSSchedule& schedule, int cap)
{
    BSSResult result;
    for (std::size_t s = 0; s < schedule.stages.size(); ++s) {
        const auto& stage = schedule.stages[s];
        DifferentialAlgebra da(stage.page, stage.differential);
        BSSStageResult r{stage.label, da.algebra().poincare(cap), da.homology(cap)};
        if (s > 0) {
            const auto& prev = result.stages.back();
            if (auto deg = prev.homology.first_difference(r.page_dims))
                throw StageMismatch(s, *deg,
                                    "homology of page E^" + prev.label + " differs from page E^" + stage.label +
                                        " in degree " + std::to_string(*deg) + ": " +
                                        std::to_string(prev.homology[*deg]) + " vs " + std::to_string(r.page_dims[*deg]));
        }
        result.stages.push_back(std::move(r));
    }
    result.e_infinity = result.stages.empty() ? GradedDims::unit(cap) : result.stages.back().homology;
    return result;
}

}  // namespace loophom
