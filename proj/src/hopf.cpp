#include "loophom/hopf.hpp"

#include <map>
#include <tuple>

#include "loophom/gf2.hpp"

namespace loophom {

namespace {

std::optional<std::size_t> last_letter(const Monomial& m)
{
    for (std::size_t i = m.size(); i-- > 0;)
        if (m[i])
            return i;
    return std::nullopt;
}

bool is_unit(const Monomial& m)
{
    for (auto e : m)
        if (e)
            return false;
    return true;
}

}  // namespace

void CoproductSpec::set(const Presentation& pres, std::size_t generator, Tensor reduced)
{
    if (generator >= pres.size())
        throw UnknownGenerator("coproduct on unknown generator");
    gens_ = pres.size();
    const int deg = pres.generator(generator).degree;
    for (const auto& [a, b] : reduced) {
        if (!pres.is_normal(a) || !pres.is_normal(b))
            throw std::invalid_argument("coproduct term is not in normal form");
        const int da = pres.degree(a), db = pres.degree(b);
        if (da < 1 || db < 1)
            throw InhomogeneousRelation("reduced coproduct term " + pres.format(a) + " (x) " + pres.format(b) +
                                        " has a degree-zero factor");
        if (da + db != deg)
            throw InhomogeneousRelation("reduced coproduct of " + pres.generator(generator).name + " has a term of degree " +
                                        std::to_string(da + db) + ", expected " + std::to_string(deg));
    }
    if (reduced.is_zero())
        values_.erase(generator);
    else
        values_[generator] = std::move(reduced);
}

const Tensor& CoproductSpec::reduced(std::size_t generator) const
{
    auto it = values_.find(generator);
    return it == values_.end() ? zero_ : it->second;
}

Bialgebra::Bialgebra(Presentation pres, CoproductSpec cop) : algebra_(std::move(pres)), cop_(std::move(cop)) {}

Tensor Bialgebra::multiply(const Tensor& x, const Tensor& y)
{
    Tensor out;
    for (const auto& [a, b] : x) {
        for (const auto& [c, d] : y) {
            const Element ac = algebra_.multiply(a, c);
            if (ac.is_zero())
                continue;
            const Element bd = algebra_.multiply(b, d);
            for (const auto& s : ac)
                for (const auto& t : bd)
                    out.toggle({s, t});
        }
    }
    return out;
}

const Tensor& Bialgebra::coproduct(const Monomial& m)
{
    if (auto it = cache_.find(m); it != cache_.end())
        return it->second;
    const auto& pres = presentation();
    Tensor result;
    const auto k = last_letter(m);
    if (!k) {
        result.toggle({m, m});
    } else {
        Monomial g = pres.generator_monomial(*k);
        Tensor dg(g, pres.unit());
        dg.toggle({pres.unit(), g});
        dg += cop_.reduced(*k);
        Monomial p = m;
        --p[*k];
        // p * g_k is already the normal monomial m because k is the last letter.
        const Tensor dp = coproduct(p);
        result = multiply(dp, dg);
    }
    return cache_.emplace(m, std::move(result)).first->second;
}

Tensor Bialgebra::coproduct(const Element& e)
{
    Tensor out;
    for (const auto& m : e)
        out += coproduct(m);
    return out;
}

Tensor Bialgebra::reduced_coproduct(const Element& e)
{
    Tensor out;
    const Monomial one = presentation().unit();
    for (const auto& m : e) {
        Tensor t = coproduct(m);
        if (!is_unit(m)) {
            t.toggle({m, one});
            t.toggle({one, m});
        }
        out += t;
    }
    return out;
}

std::vector<Element> Bialgebra::primitives_in_degree(int n)
{
    std::vector<Element> out;
    if (n <= 0)
        return out;
    const auto basis = algebra_.basis_in_degree(n);
    std::map<MonomialPair, std::size_t> rows;
    std::vector<Tensor> images;
    for (const auto& m : basis) {
        images.push_back(reduced_coproduct(Element(m)));
        for (const auto& p : images.back())
            rows.emplace(p, rows.size());
    }
    gf2::Matrix::Builder mb(rows.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (const auto& p : images[c])
            mb.set(rows.at(p), c);
    for (const auto& v : gf2::kernel_basis(std::move(mb).build())) {
        Element e;
        for (auto c : v.support())
            e.toggle(basis[c]);
        out.push_back(std::move(e));
    }
    return out;
}

std::string Bialgebra::format(const Tensor& t) const
{
    if (t.is_zero())
        return "0";
    const auto& pres = presentation();
    std::string out;
    for (const auto& [a, b] : t) {
        if (!out.empty())
            out += " + ";
        out += pres.format(a) + " (x) " + pres.format(b);
    }
    return out;
}

CheckReport Bialgebra::verify(int cap)
{
    CheckReport report;
    const auto& pres = presentation();
    const std::size_t n = pres.size();
    auto delta_gen = [&](std::size_t i) { return coproduct(pres.generator_monomial(i)); };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int deg = pres.generator(i).degree + pres.generator(j).degree;
            if (deg > cap)
                continue;
            ++report.items_checked;
            const Tensor di = delta_gen(i), dj = delta_gen(j);
            const Tensor lhs = multiply(di, dj) + multiply(dj, di);
            const Tensor rhs = coproduct(pres.commutator(i, j));
            if (lhs != rhs)
                report.fail("relation", deg,
                            "[" + pres.generator(i).name + "," + pres.generator(j).name +
                                "]: coproducts differ by " + format(lhs + rhs));
        }
        const int h = pres.generator(i).height;
        if (h && h * pres.generator(i).degree <= cap) {
            ++report.items_checked;
            const Tensor d = delta_gen(i);
            Tensor power = d;
            for (int e = 1; e < h; ++e)
                power = multiply(power, d);
            if (!power.is_zero())
                report.fail("height", h * pres.generator(i).degree,
                            pres.generator(i).name + "^" + std::to_string(h) + " has coproduct " + format(power));
        }
    }

    using Triple = std::tuple<Monomial, Monomial, Monomial>;
    const Monomial one = pres.unit();
    for (int d = 1; d <= cap; ++d) {
        for (const auto& m : algebra_.basis_in_degree(d)) {
            report.items_checked += 2;
            const Tensor dm = coproduct(m);
            std::set<Triple> left, right;
            auto toggle = [](std::set<Triple>& s, Triple t) {
                if (auto it = s.find(t); it != s.end())
                    s.erase(it);
                else
                    s.insert(std::move(t));
            };
            for (const auto& [a, b] : dm) {
                for (const auto& [a1, a2] : coproduct(a))
                    toggle(left, {a1, a2, b});
                for (const auto& [b1, b2] : coproduct(b))
                    toggle(right, {a, b1, b2});
            }
            if (left != right)
                report.fail("coassociativity", d, pres.format(m));

            Element eps_left, eps_right;
            for (const auto& [a, b] : dm) {
                if (is_unit(a))
                    eps_left.toggle(b);
                if (is_unit(b))
                    eps_right.toggle(a);
            }
            if (eps_left != Element(m) || eps_right != Element(m))
                report.fail("counit", d, pres.format(m));
        }
    }
    report.sort();
    return report;
}

std::optional<std::size_t> CoalgebraData::find(const std::string& label) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return i;
    return std::nullopt;
}

std::vector<std::size_t> CoalgebraData::in_degree(int n) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (degrees[i] == n)
            out.push_back(i);
    return out;
}

std::size_t CoalgebraData::add(std::string label, int degree)
{
    labels.push_back(std::move(label));
    degrees.push_back(degree);
    reduced.emplace_back();
    return labels.size() - 1;
}

void CoalgebraData::validate() const
{
    using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
    for (std::size_t i = 0; i < size(); ++i) {
        if (degrees[i] < 1)
            throw std::invalid_argument("coalgebra element " + labels[i] + " has nonpositive degree");
        std::set<Triple> left, right;
        auto toggle = [](std::set<Triple>& s, Triple t) {
            if (auto it = s.find(t); it != s.end())
                s.erase(it);
            else
                s.insert(t);
        };
        for (const auto& [j, k] : reduced[i]) {
            if (j >= size() || k >= size() || degrees[j] + degrees[k] != degrees[i])
                throw InhomogeneousRelation("reduced coproduct of " + labels[i] + " is not bihomogeneous");
            for (const auto& [a, b] : reduced[j])
                toggle(left, {a, b, k});
            for (const auto& [a, b] : reduced[k])
                toggle(right, {j, a, b});
        }
        if (left != right)
            throw CoassociativityFailure("coassociativity fails on " + labels[i]);
    }
}

CoalgebraData dual_structure_constants(const QuotientRing& ring, int cap)
{
    if (cap > ring.cap())
        throw CapExceeded("dualization cap " + std::to_string(cap) + " exceeds ring cap " + std::to_string(ring.cap()));
    CoalgebraData out;
    out.name = ring.ring().name() + "^dual";
    out.cap = cap;
    std::vector<std::vector<Monomial>> basis(static_cast<std::size_t>(cap + 1));
    std::map<Monomial, std::size_t> index;
    for (int n = 1; n <= cap; ++n) {
        basis[n] = ring.standard_basis(n);
        for (const auto& m : basis[n])
            index.emplace(m, out.add(ring.ring().format(m), n));
    }
    for (int p = 1; p <= cap; ++p)
        for (int q = 1; p + q <= cap; ++q)
            for (const auto& x : basis[p])
                for (const auto& y : basis[q])
                    for (const auto& z : ring.multiply(x, y))
                        out.reduced[index.at(z)].emplace_back(index.at(x), index.at(y));
    out.validate();
    return out;
}

CoalgebraData coalgebra_of(Bialgebra& b, int cap)
{
    CoalgebraData out;
    out.name = b.presentation().name();
    out.cap = cap;
    std::map<Monomial, std::size_t> index;
    std::vector<Monomial> order;
    for (int n = 1; n <= cap; ++n) {
        for (const auto& m : b.algebra().basis_in_degree(n)) {
            index.emplace(m, out.add(b.presentation().format(m), n));
            order.push_back(m);
        }
    }
    for (const auto& m : order)
        for (const auto& [x, y] : b.reduced_coproduct(Element(m)))
            out.reduced[index.at(m)].emplace_back(index.at(x), index.at(y));
    out.validate();
    return out;
}

std::vector<Monomial> dual_product(Bialgebra& b, const Monomial& x, const Monomial& y)
{
    const auto& pres = b.presentation();
    std::vector<Monomial> out;
    for (const auto& z : b.algebra().basis_in_degree(pres.degree(x) + pres.degree(y)))
        if (b.coproduct(z).contains({x, y}))
            out.push_back(z);
    return out;
}

}  // namespace loophom
