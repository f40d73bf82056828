#include "loophom/resolution.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "loophom/gf2.hpp"

namespace loophom {

namespace {

constexpr int kA = 6, kA2 = 12, kB = 10, kT = 24, kE = 26;

int family_degree(std::uint32_t mask, int base)
{
    int d = 0;
    for (int n = 0; mask; ++n, mask >>= 1)
        if (mask & 1U)
            d += base << n;
    return d;
}

void toggle(std::set<Cell>& s, const Cell& c)
{
    if (auto it = s.find(c); it != s.end())
        s.erase(it);
    else
        s.insert(c);
}

std::uint32_t below(int n) { return (std::uint32_t{1} << n) - 1; }

// Number of divided-power slots 2^n with base * 2^n <= limit.
int slots(int base, int limit)
{
    int n = 0;
    while ((base << n) <= limit)
        ++n;
    return n;
}

}  // namespace

int Cell::degree() const
{
    int d = 7 * x + 11 * y + 13 * z;
    if (a & 1U)
        d += kA;
    if (a & 2U)
        d += kA2;
    return d + family_degree(b, kB) + family_degree(t, kT) + family_degree(e, kE);
}

std::string Cell::to_string() const
{
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty())
            out += '*';
        out += s;
    };
    if (x)
        add(x > 1 ? "x^" + std::to_string(x) : "x");
    if (y)
        add("y");
    if (z)
        add("z");
    if (a & 1U)
        add("a");
    if (a & 2U)
        add("a^2");
    auto fam = [&](std::uint32_t m, const char* name) {
        for (int n = 0; m; ++n, m >>= 1)
            if (m & 1U)
                add("g" + std::to_string(1 << n) + "(" + name + ")");
    };
    fam(b, "b");
    fam(t, "t");
    fam(e, "e");
    return out.empty() ? "1" : out;
}

Resolution::Resolution(int cap, TRule rule, Factors factors) : cap_(cap), rule_(rule), factors_(factors)
{
    if (cap < 0)
        throw std::invalid_argument("negative cap");

    // Degree bookkeeping of every rule for 2^n <= cap.
    for (int n = 0; (1 << n) <= std::max(cap, 1); ++n) {
        const int pow = 1 << n;
        const int lhs_t = kT * pow + 1;
        const int rhs_t = 13 + kA2 + (rule == TRule::t_family ? kT : kB) * (pow - 1);
        if (lhs_t != rhs_t)
            throw DegreeInhomogeneous("rule for gamma_" + std::to_string(pow) + "(t) at n = " + std::to_string(n) +
                                      ": degree " + std::to_string(lhs_t) + " vs " + std::to_string(rhs_t));
        if (kB * pow + 1 != 11 + kB * (pow - 1) || kE * pow + 1 != 21 + kA + kE * (pow - 1))
            throw DegreeInhomogeneous("divided power rule at n = " + std::to_string(n));
    }

    const int top = cap + 1;
    const int nb = factors.b ? slots(kB, top) : 0;
    const int nt = factors.t ? slots(kT, top) : 0;
    const int ne = factors.e ? slots(kE, top) : 0;
    cells_.assign(static_cast<std::size_t>(top + 1), {});
    for (int x = 0; x <= (factors.x ? 3 : 0); ++x)
        for (int y = 0; y <= (factors.y ? 1 : 0); ++y)
            for (int z = 0; z <= (factors.z ? 1 : 0); ++z)
                for (int a = 0; a < 4; ++a) {
                    if (((a & 1) && !factors.a) || ((a & 2) && !factors.a2))
                        continue;
                    for (std::uint32_t b = 0; b < (1U << nb); ++b)
                        for (std::uint32_t t = 0; t < (1U << nt); ++t)
                            for (std::uint32_t e = 0; e < (1U << ne); ++e) {
                                Cell c{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y),
                                       static_cast<std::uint8_t>(z), static_cast<std::uint8_t>(a), b, t, e};
                                const int d = c.degree();
                                if (d <= top)
                                    cells_[d].push_back(c);
                            }
                }
    for (auto& v : cells_)
        std::sort(v.begin(), v.end());
}

std::vector<Cell> Resolution::differential(const Cell& c) const
{
    std::set<Cell> out;
    // Each factor is replaced by its differential; products with repeated
    // exterior or divided slots vanish.
    if (c.a & 1U) {  // d a = x
        Cell r = c;
        r.a &= ~1U;
        if (r.x < 3) {
            ++r.x;
            toggle(out, r);
        }
    }
    if (c.a & 2U) {  // d a^2 = z
        Cell r = c;
        r.a &= ~2U;
        if (!r.z) {
            r.z = 1;
            toggle(out, r);
        }
    }
    for (int n = 0; (c.b >> n) != 0; ++n) {
        if (!((c.b >> n) & 1U))
            continue;
        Cell r = c;
        r.b &= ~(1U << n);
        if (!r.y && !(r.b & below(n))) {
            r.y = 1;
            r.b |= below(n);
            toggle(out, r);
        }
    }
    for (int n = 0; (c.t >> n) != 0; ++n) {
        if (!((c.t >> n) & 1U))
            continue;
        Cell r = c;
        r.t &= ~(1U << n);
        std::uint32_t& tail = rule_ == TRule::t_family ? r.t : r.b;
        if (!r.z && !(r.a & 2U) && !(tail & below(n))) {
            r.z = 1;
            r.a |= 2U;
            tail |= below(n);
            toggle(out, r);
        }
    }
    for (int n = 0; (c.e >> n) != 0; ++n) {
        if (!((c.e >> n) & 1U))
            continue;
        Cell r = c;
        r.e &= ~(1U << n);
        if (r.x == 0 && !(r.a & 1U) && !(r.e & below(n))) {
            r.x = 3;
            r.a |= 1U;
            r.e |= below(n);
            toggle(out, r);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Cell> Resolution::differential(const std::vector<Cell>& s) const
{
    std::set<Cell> out;
    for (const auto& c : s)
        for (const auto& t : differential(c))
            toggle(out, t);
    return {out.begin(), out.end()};
}

GradedDims Resolution::homology() const
{
    // D_n : C_n -> C_{n+1}
    auto matrix = [&](int n) {
        const auto& src = cells_[n];
        const auto& dst = cells_[n + 1];
        std::map<Cell, std::size_t> index;
        for (const auto& c : dst)
            index.emplace(c, index.size());
        gf2::Matrix::Builder b(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col)
            for (const auto& t : differential(src[col]))
                b.flip(index.at(t), col);
        return std::move(b).build();
    };
    GradedDims out(cap_);
    gf2::Matrix d_in(cells_[0].size(), 0);
    for (int n = 0; n <= cap_; ++n) {
        gf2::Matrix d_out = matrix(n);
        out[n] = gf2::homology_dim(d_out, d_in);
        d_in = std::move(d_out);
    }
    return out;
}

CheckReport Resolution::verify() const
{
    CheckReport report;
    for (int n = 0; n <= cap_; ++n) {
        for (const auto& c : cells_[n]) {
            ++report.items_checked;
            for (const auto& t : differential(c))
                if (t.degree() != n + 1)
                    report.fail("degree", n, "d(" + c.to_string() + ") contains " + t.to_string());
            const auto dd = differential(differential(c));
            if (!dd.empty())
                report.fail("d-squared", n, "d(d(" + c.to_string() + ")) != 0");
        }
    }
    if (report.pass()) {
        const GradedDims h = homology();
        ++report.items_checked;
        if (auto deg = h.first_difference(GradedDims::unit(cap_)))
            report.fail("acyclicity", *deg, "homology " + h.to_string());
    }
    report.sort();
    return report;
}

Resolution build_resolution(int cap, TRule rule) { return Resolution(cap, rule); }

CheckReport verify_resolution(int cap)
{
    CheckReport report = Resolution(cap).verify();
    const char* names[] = {"left-factor", "right-factor"};
    const Factors parts[] = {Factors::left(), Factors::right()};
    for (int i = 0; i < 2; ++i) {
        const Resolution sub(cap, TRule::t_family, parts[i]);
        ++report.items_checked;
        const GradedDims h = sub.homology();
        if (auto deg = h.first_difference(GradedDims::unit(cap)))
            report.fail(names[i], *deg, "homology " + h.to_string());
    }
    report.sort();
    return report;
}

GradedDims ext_dims(int cap)
{
    const Resolution r(cap);
    GradedDims out(cap);
    for (int n = 0; n <= cap; ++n) {
        for (const auto& c : r.cells(n)) {
            if (!c.lambda_trivial())
                continue;
            ++out[n];
            // Hom(P, F_2) sees only the part of d(c) whose coefficient is a unit.
            for (const auto& t : r.differential(c))
                if (t.lambda_trivial())
                    throw InducedDifferentialNonzero("d(" + c.to_string() + ") has the free term " + t.to_string());
        }
    }
    return out;
}

}  // namespace loophom
