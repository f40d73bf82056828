#include "loophom/steenrod.hpp"

#include <bit>
#include <numeric>

namespace loophom {

bool binomial_odd(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return false;
    return (k & ~n) == 0;  // Lucas
}

bool is_admissible(const SqMonomial& w)
{
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] < 2 * w[j + 1])
            return false;
    return true;
}

namespace {

void toggle(SqSum& s, const SqMonomial& m)
{
    if (auto it = s.find(m); it != s.end())
        s.erase(it);
    else
        s.insert(m);
}

const SqSum& reduce_memo(const SqMonomial& w, std::map<SqMonomial, SqSum>& memo)
{
    if (auto it = memo.find(w); it != memo.end())
        return it->second;
    SqSum out;
    std::size_t j = 0;
    while (j + 1 < w.size() && w[j] >= 2 * w[j + 1])
        ++j;
    if (j + 1 >= w.size()) {
        out.insert(w);
    } else {
        const int a = w[j], b = w[j + 1];
        // Sq^a Sq^b = sum_t C(b-1-t, a-2t) Sq^{a+b-t} Sq^t   for a < 2b
        for (int t = 0; 2 * t <= a; ++t) {
            if (!binomial_odd(b - 1 - t, a - 2 * t))
                continue;
            SqMonomial next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
            next.push_back(a + b - t);
            if (t > 0)
                next.push_back(t);
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(j + 2), w.end());
            for (const auto& m : reduce_memo(next, memo))
                toggle(out, m);
        }
    }
    return memo.emplace(w, std::move(out)).first->second;
}

bool power_of_two(int k) { return k > 0 && std::has_single_bit(static_cast<unsigned>(k)); }

}  // namespace

SqSum adem_reduce(const SqMonomial& word, int cap)
{
    SqMonomial w;
    for (int i : word) {
        if (i < 0)
            throw std::invalid_argument("negative Steenrod exponent");
        if (i > 0)
            w.push_back(i);
    }
    const int total = std::accumulate(w.begin(), w.end(), 0);
    if (total > cap)
        throw CapExceeded("Steenrod composite of degree " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
    std::map<SqMonomial, SqSum> memo;
    return reduce_memo(w, memo);
}

void SteenrodSpec::set(const Presentation& pres, int k, std::size_t generator, Element value)
{
    if (k < 1)
        throw std::invalid_argument("Steenrod square index must be positive");
    if (generator >= pres.size())
        throw UnknownGenerator("Steenrod value on unknown generator");
    const int expected = pres.generator(generator).degree - k;
    for (const auto& m : value) {
        if (!pres.is_normal(m))
            throw std::invalid_argument("Steenrod value is not in normal form");
        if (pres.degree(m) != expected)
            throw InhomogeneousRelation("Sq^" + std::to_string(k) + "_*(" + pres.generator(generator).name +
                                        ") must have degree " + std::to_string(expected));
    }
    values_[{k, generator}] = std::move(value);
}

const Element* SteenrodSpec::find(int k, std::size_t generator) const
{
    auto it = values_.find({k, generator});
    return it == values_.end() ? nullptr : &it->second;
}

SteenrodModule::SteenrodModule(Presentation pres, CoproductSpec cop, SteenrodSpec spec)
    : bialgebra_(std::move(pres), std::move(cop)), spec_(std::move(spec))
{
}

const Element& SteenrodModule::generator_value(int k, std::size_t g)
{
    const auto key = std::make_pair(k, g);
    if (auto it = gen_cache_.find(key); it != gen_cache_.end())
        return it->second;
    const auto& pres = presentation();
    Element value;
    if (k == 0) {
        value = Element(pres.generator_monomial(g));
    } else if (k > pres.generator(g).degree) {
        // zero by grading
    } else if (const Element* given = spec_.find(k, g)) {
        value = *given;
    } else if (!power_of_two(k)) {
        // k = 2^j + m with 0 < m < 2^j.  From the Adem relation for Sq^m Sq^{2^j}:
        // Sq^k = Sq^m Sq^{2^j} + sum_{i>=1} C(2^j-1-i, m-2i) Sq^{k-i} Sq^i.
        const int top = std::bit_floor(static_cast<unsigned>(k));
        const int m = k - top;
        value = act(top, Element(generator_value(m, g)));
        for (int i = 1; 2 * i <= m; ++i)
            if (binomial_odd(top - 1 - i, m - 2 * i))
                value += act(i, Element(generator_value(k - i, g)));
    }
    return gen_cache_.emplace(key, std::move(value)).first->second;
}

const Element& SteenrodModule::act(int k, const Monomial& m)
{
    const auto key = std::make_pair(k, m);
    if (auto it = act_cache_.find(key); it != act_cache_.end())
        return it->second;
    const auto& pres = presentation();
    Element result;
    if (k == 0) {
        result = Element(m);
    } else if (pres.degree(m) >= k) {
        std::size_t g = m.size();
        while (g-- > 0 && !m[g]) {
        }
        Monomial p = m;
        --p[g];
        for (int i = 0; i <= k; ++i) {
            const Element& sg = generator_value(k - i, g);
            if (sg.is_zero())
                continue;
            const Element left = act(i, p);
            if (!left.is_zero())
                result += bialgebra_.algebra().multiply(left, sg);
        }
    }
    return act_cache_.emplace(key, std::move(result)).first->second;
}

Element SteenrodModule::act(int k, const Element& e)
{
    Element out;
    for (const auto& m : e)
        out += act(k, m);
    return out;
}

Element SteenrodModule::cartan_product(int k, const std::vector<std::size_t>& word)
{
    std::vector<Element> s(static_cast<std::size_t>(k + 1));
    s[0] = Element(presentation().unit());
    for (auto g : word) {
        std::vector<Element> next(s.size());
        for (int i = 0; i <= k; ++i)
            for (int a = 0; a <= i; ++a) {
                if (s[a].is_zero())
                    continue;
                const Element& v = generator_value(i - a, g);
                if (!v.is_zero())
                    next[i] += bialgebra_.algebra().multiply(s[a], v);
            }
        s = std::move(next);
    }
    return s[k];
}

CheckReport SteenrodModule::verify(int cap)
{
    CheckReport report;
    const auto& pres = presentation();
    const std::size_t n = pres.size();
    const std::string sq = "Sq^";

    // (a) relations
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int deg = pres.generator(i).degree + pres.generator(j).degree;
            if (deg > cap)
                continue;
            const Element& c = pres.commutator(i, j);
            for (int k = 1; k <= deg; ++k) {
                ++report.items_checked;
                const Element lhs = cartan_product(k, {i, j}) + cartan_product(k, {j, i});
                const Element rhs = act(k, c);
                if (lhs != rhs)
                    report.fail("relation", deg,
                                sq + std::to_string(k) + "_* on [" + pres.generator(i).name + "," +
                                    pres.generator(j).name + "]: " + pres.format(lhs) + " vs " + pres.format(rhs));
            }
        }
        const int h = pres.generator(i).height;
        const int deg = h * pres.generator(i).degree;
        if (h && deg <= cap) {
            const std::vector<std::size_t> word(static_cast<std::size_t>(h), i);
            for (int k = 1; k <= deg; ++k) {
                ++report.items_checked;
                const Element v = cartan_product(k, word);
                if (!v.is_zero())
                    report.fail("relation", deg,
                                sq + std::to_string(k) + "_*(" + pres.generator(i).name + "^" + std::to_string(h) +
                                    ") = " + pres.format(v));
            }
        }
    }

    // (b) Adem relations, in the reversed (homology) composition order
    std::map<std::pair<int, int>, SqSum> adem;
    for (int d = 1; d <= cap; ++d) {
        const auto basis = bialgebra_.algebra().basis_in_degree(d);
        for (int a = 1; a < d; ++a) {
            for (int b = (a / 2) + 1; a + b <= d; ++b) {
                auto it = adem.find({a, b});
                if (it == adem.end())
                    it = adem.emplace(std::make_pair(a, b), adem_reduce({a, b}, a + b)).first;
                for (const auto& m : basis) {
                    ++report.items_checked;
                    const Element lhs = act(b, act(a, m));
                    Element rhs;
                    for (const auto& word : it->second) {
                        Element v(m);
                        for (int s : word)
                            v = act(s, v);
                        rhs += v;
                    }
                    if (lhs != rhs)
                        report.fail("adem", d,
                                    "Sq^" + std::to_string(a) + "Sq^" + std::to_string(b) + " on " + pres.format(m) +
                                        ": " + pres.format(lhs) + " vs " + pres.format(rhs));
                }
            }
        }
    }

    // (c) coproduct compatibility
    for (int d = 1; d <= cap; ++d) {
        for (const auto& m : bialgebra_.algebra().basis_in_degree(d)) {
            const Tensor dm = bialgebra_.coproduct(m);
            for (int k = 1; k <= d; ++k) {
                ++report.items_checked;
                const Tensor lhs = bialgebra_.coproduct(act(k, m));
                Tensor rhs;
                for (const auto& [x, y] : dm) {
                    for (int i = 0; i <= k; ++i) {
                        const Element& sx = act(i, x);
                        if (sx.is_zero())
                            continue;
                        const Element& sy = act(k - i, y);
                        for (const auto& u : sx)
                            for (const auto& v : sy)
                                rhs.toggle({u, v});
                    }
                }
                if (lhs != rhs)
                    report.fail("coproduct", d,
                                sq + std::to_string(k) + "_* on " + pres.format(m) + ": differs by " +
                                    bialgebra_.format(lhs + rhs));
            }
        }
    }
    report.sort();
    return report;
}

CheckReport verify_cohomology_squares(const CommutativeRing& ring)
{
    CheckReport report;
    for (const auto& sq : ring.squares()) {
        ++report.items_checked;
        const int expected = ring.variables().at(sq.variable).degree + sq.k;
        for (const auto& m : sq.value)
            if (ring.degree(m) != expected)
                report.fail("square-degree", expected,
                            "Sq^" + std::to_string(sq.k) + "(" + ring.variables()[sq.variable].name + ")");
    }
    return report;
}

}  // namespace loophom
