#include "loophom/cobar.hpp"

#include <functional>
#include <map>

#include "loophom/gf2.hpp"

namespace loophom {

namespace {

void check_letters(const CobarWord& w, const CoalgebraData& c)
{
    for (auto l : w)
        if (l >= c.size())
            throw UnknownLetter("letter index " + std::to_string(l) + " is not in " + c.name);
}

gf2::Matrix differential_matrix(const CoalgebraData& c, const std::vector<CobarWord>& source,
                                const std::vector<CobarWord>& target)
{
    std::map<CobarWord, std::size_t> index;
    for (const auto& w : target)
        index.emplace(w, index.size());
    gf2::Matrix::Builder b(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col)
        for (const auto& t : cobar_differential(CobarSum(source[col]), c))
            b.flip(index.at(t), col);
    return std::move(b).build();
}

}  // namespace

int cobar_degree(const CobarWord& w, const CoalgebraData& c)
{
    check_letters(w, c);
    int d = 0;
    for (auto l : w)
        d += c.degrees[l] - 1;
    return d;
}

CobarWord cobar_word(const CoalgebraData& c, const std::vector<std::string>& labels)
{
    CobarWord w;
    for (const auto& l : labels) {
        auto i = c.find(l);
        if (!i)
            throw UnknownLetter("no basis element '" + l + "' in " + c.name);
        w.push_back(*i);
    }
    return w;
}

std::string format(const CobarSum& s, const CoalgebraData& c)
{
    if (s.is_zero())
        return "0";
    std::string out;
    for (const auto& w : s) {
        if (!out.empty())
            out += " + ";
        out += '[';
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                out += '|';
            out += c.labels.at(w[i]);
        }
        out += ']';
    }
    return out;
}

CobarSum cobar_differential(const CobarSum& s, const CoalgebraData& c)
{
    CobarSum out;
    for (const auto& w : s) {
        check_letters(w, c);
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            for (const auto& [a, b] : c.reduced[w[pos]]) {
                CobarWord next;
                next.reserve(w.size() + 1);
                next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
                next.push_back(a);
                next.push_back(b);
                next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 1), w.end());
                out.toggle(next);
            }
        }
    }
    return out;
}

std::vector<CobarWord> cobar_basis(const CoalgebraData& c, int n)
{
    if (n + 1 > c.cap && n > 0)
        throw CapExceeded("cobar degree " + std::to_string(n) + " needs the coalgebra through degree " +
                          std::to_string(n + 1));
    std::vector<std::vector<std::size_t>> by_letter_degree(static_cast<std::size_t>(std::max(n, 0) + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int ld = c.degrees[i] - 1;
        if (ld >= 1 && ld <= n)
            by_letter_degree[ld].push_back(i);
    }
    std::vector<CobarWord> out;
    CobarWord cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int ld = 1; ld <= remaining; ++ld)
            for (auto l : by_letter_degree[ld]) {
                cur.push_back(l);
                rec(remaining - ld);
                cur.pop_back();
            }
    };
    if (n >= 0)
        rec(n);
    return out;
}

GradedDims cotor(const CoalgebraData& c, int cap)
{
    if (cap + 2 > c.cap)
        throw CapExceeded("cotor through " + std::to_string(cap) + " needs the coalgebra through degree " +
                          std::to_string(cap + 2));
    GradedDims out(cap);
    std::vector<CobarWord> lower;  // C_{n-1}
    std::vector<CobarWord> here = cobar_basis(c, 0);
    gf2::Matrix d_out(0, here.size());
    for (int n = 0; n <= cap; ++n) {
        std::vector<CobarWord> upper = cobar_basis(c, n + 1);
        gf2::Matrix d_in = differential_matrix(c, upper, here);
        out[n] = gf2::homology_dim(d_out, d_in);
        d_out = std::move(d_in);
        here = std::move(upper);
    }
    return out;
}

BoundaryVerdict is_boundary(const CobarSum& w, const CoalgebraData& c)
{
    BoundaryVerdict verdict;
    if (w.is_zero()) {
        verdict.boundary = true;
        return verdict;
    }
    std::optional<int> deg;
    for (const auto& t : w) {
        const int d = cobar_degree(t, c);
        if (deg && *deg != d)
            throw NotACycle("cobar element is not homogeneous");
        deg = d;
    }
    if (!cobar_differential(w, c).is_zero())
        throw NotACycle(format(w, c) + " is not a cycle");
    const auto target = cobar_basis(c, *deg);
    const auto source = cobar_basis(c, *deg + 1);
    std::map<CobarWord, std::size_t> index;
    for (const auto& t : target)
        index.emplace(t, index.size());
    gf2::BitVector rhs(target.size());
    for (const auto& t : w)
        rhs.flip(index.at(t));
    auto x = gf2::solve(differential_matrix(c, source, target), rhs);
    if (!x)
        return verdict;
    verdict.boundary = true;
    for (auto i : x->support())
        verdict.witness.toggle(source[i]);
    return verdict;
}

}  // namespace loophom
