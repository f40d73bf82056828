#include "loophom/commutative.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace loophom {

namespace {

bool divides(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a)
{
    Monomial q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        q[i] = static_cast<std::uint16_t>(b[i] - a[i]);
    return q;
}

Monomial product(const Monomial& a, const Monomial& b)
{
    Monomial p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        p[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return p;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        l[i] = std::max(a[i], b[i]);
    return l;
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i])
            return false;
    return true;
}

Element shifted(const Element& p, const Monomial& by)
{
    Element out;
    for (const auto& m : p)
        out.toggle(product(m, by));
    return out;
}

}  // namespace

CommutativeRing::CommutativeRing(std::string name, std::vector<VariableSpec> variables)
    : name_(std::move(name)), vars_(std::move(variables))
{
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.degree < 1)
            throw std::invalid_argument("variable " + v.name + " must have positive degree");
        if (!seen.insert(v.name).second)
            throw std::invalid_argument("duplicate variable " + v.name);
    }
}

std::optional<std::size_t> CommutativeRing::find(const std::string& name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t CommutativeRing::index_of(const std::string& name) const
{
    if (auto i = find(name))
        return *i;
    throw UnknownGenerator("unknown variable '" + name + "'");
}

int CommutativeRing::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        d += m[i] * vars_[i].degree;
    return d;
}

std::optional<int> CommutativeRing::degree(const Element& e) const
{
    std::optional<int> d;
    for (const auto& m : e) {
        const int dm = degree(m);
        if (d && *d != dm)
            throw InhomogeneousRelation("relation " + format(e) + " is not homogeneous");
        d = dm;
    }
    return d;
}

void CommutativeRing::add_relation(Element relation)
{
    degree(relation);
    if (!relation.is_zero())
        relations_.push_back(std::move(relation));
}

void CommutativeRing::add_square(CohomologySquare sq)
{
    if (sq.variable >= vars_.size())
        throw UnknownGenerator("square on unknown variable");
    if (auto d = degree(sq.value); d && *d != vars_[sq.variable].degree + sq.k)
        throw InhomogeneousRelation("Sq^" + std::to_string(sq.k) + "(" + vars_[sq.variable].name +
                                    ") must have degree " + std::to_string(vars_[sq.variable].degree + sq.k));
    squares_.push_back(std::move(sq));
}

CommutativeRing CommutativeRing::reordered(const std::vector<std::string>& order) const
{
    if (order.size() != vars_.size())
        throw std::invalid_argument("reordering must list every variable");
    std::vector<std::size_t> perm;  // new position -> old index
    std::vector<VariableSpec> vars;
    for (const auto& n : order) {
        perm.push_back(index_of(n));
        vars.push_back(vars_[perm.back()]);
    }
    auto remap = [&](const Element& e) {
        Element out;
        for (const auto& m : e) {
            Monomial r(m.size());
            for (std::size_t i = 0; i < perm.size(); ++i)
                r[i] = m[perm[i]];
            out.toggle(r);
        }
        return out;
    };
    CommutativeRing out(name_, std::move(vars));
    for (const auto& r : relations_)
        out.add_relation(remap(r));
    for (const auto& sq : squares_) {
        const auto pos = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), sq.variable) - perm.begin());
        out.add_square({sq.k, pos, remap(sq.value)});
    }
    return out;
}

std::string CommutativeRing::format(const Monomial& m) const
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i])
            continue;
        if (!out.empty())
            out += '*';
        out += vars_[i].name;
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string CommutativeRing::format(const Element& e) const
{
    if (e.is_zero())
        return "0";
    std::vector<Monomial> terms(e.begin(), e.end());
    std::string out;
    for (const auto& m : terms) {
        if (!out.empty())
            out += " + ";
        out += format(m);
    }
    return out;
}

QuotientRing::QuotientRing(CommutativeRing ring, int cap) : ring_(std::move(ring)), cap_(cap)
{
    if (cap < 0)
        throw std::invalid_argument("negative truncation cap");
    compute();
}

bool QuotientRing::less(const Monomial& a, const Monomial& b) const
{
    const int da = ring_.degree(a), db = ring_.degree(b);
    if (da != db)
        return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

Monomial QuotientRing::leading(const Element& p) const
{
    if (p.is_zero())
        throw std::invalid_argument("zero polynomial has no leading term");
    const Monomial* best = nullptr;
    for (const auto& m : p)
        if (!best || less(*best, m))
            best = &m;
    return *best;
}

Element QuotientRing::reduce(Element p) const
{
    Element remainder;
    while (!p.is_zero()) {
        const Monomial lt = leading(p);
        bool reduced = false;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (divides(leads_[i], lt)) {
                p += shifted(basis_[i], quotient(lt, leads_[i]));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            p.toggle(lt);
            remainder.toggle(lt);
        }
    }
    return remainder;
}

void QuotientRing::compute()
{
    auto add = [&](Element g) {
        leads_.push_back(leading(g));
        basis_.push_back(std::move(g));
    };
    for (const auto& r : ring_.relations()) {
        if (auto d = ring_.degree(r); d && *d > cap_)
            continue;
        Element g = reduce(r);
        if (!g.is_zero())
            add(std::move(g));
    }

    // Pairs are processed in ascending degree of lcm; S-polynomials above cap are dropped.
    struct Pair {
        int degree;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (coprime(leads_[i], leads_[j]))
                continue;
            const int d = ring_.degree(lcm(leads_[i], leads_[j]));
            if (d <= cap_)
                pairs.push_back({d, i, j});
        }
    };
    for (std::size_t j = 1; j < basis_.size(); ++j)
        push_pairs(j);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
        const Pair pr = *it;
        pairs.erase(it);
        const Monomial l = lcm(leads_[pr.i], leads_[pr.j]);
        Element s = shifted(basis_[pr.i], quotient(l, leads_[pr.i])) + shifted(basis_[pr.j], quotient(l, leads_[pr.j]));
        s = reduce(std::move(s));
        if (!s.is_zero()) {
            add(std::move(s));
            push_pairs(basis_.size() - 1);
        }
    }
}

void QuotientRing::check(int n) const
{
    if (n > cap_)
        throw CapExceeded("degree " + std::to_string(n) + " exceeds truncation cap " + std::to_string(cap_));
}

std::vector<Monomial> QuotientRing::standard_basis(int n) const
{
    check(n);
    std::vector<Monomial> out;
    if (n < 0)
        return out;
    const auto& vars = ring_.variables();
    Monomial cur(vars.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == vars.size()) {
            if (remaining != 0)
                return;
            for (const auto& lt : leads_)
                if (divides(lt, cur))
                    return;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e * vars[i].degree <= remaining; ++e) {
            cur[i] = static_cast<std::uint16_t>(e);
            rec(i + 1, remaining - e * vars[i].degree);
        }
        cur[i] = 0;
    };
    rec(0, n);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return less(b, a); });
    return out;
}

GradedDims QuotientRing::dims() const
{
    GradedDims d(cap_);
    for (int n = 0; n <= cap_; ++n)
        d[n] = standard_basis(n).size();
    return d;
}

Element QuotientRing::multiply(const Monomial& a, const Monomial& b) const
{
    check(ring_.degree(a) + ring_.degree(b));
    return reduce(Element(product(a, b)));
}

std::vector<Monomial> commutative_quotient_basis(const QuotientRing& q, int n) { return q.standard_basis(n); }

}  // namespace loophom
