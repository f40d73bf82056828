#pragma once
// Helpers shared by the unit suites: fixture paths and random generators.

#include <random>
#include <string>
#include <vector>

#include "loophom/fixtures.hpp"
#include "loophom/graded_dims.hpp"
#include "loophom/gf2.hpp"

namespace support {

inline std::string fixture_path(const std::string& file) { return std::string(LOOPHOM_TEST_FIXTURES) + "/" + file; }
inline loophom::Fixture fixture(const std::string& file) { return loophom::load_fixture_file(fixture_path(file)); }

using Rng = std::mt19937_64;

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

inline loophom::gf2::Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density = 0.5)
{
    loophom::gf2::Matrix::Builder b(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng, density))
                b.set(r, c);
    return std::move(b).build();
}

inline std::vector<std::vector<int>> to_rows(const loophom::gf2::Matrix& m)
{
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m.get(r, c);
    return rows;
}

// Rank by plain Gaussian elimination on int rows; independent of the packed kernels.
inline std::size_t naive_rank(std::vector<std::vector<int>> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c])
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = 0; k < cols; ++k)
                    rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

// "a4*z6 + b10" in the given presentation or ring; "0" and "1" are allowed.
template <class Structure>
loophom::Element element(const Structure& st, const std::string& text)
{
    auto trim = [](std::string t) {
        t.erase(0, t.find_first_not_of(' '));
        t.erase(t.find_last_not_of(' ') + 1);
        return t;
    };
    const std::size_t n = st.generators_count();
    loophom::Element out;
    if (trim(text) == "0")
        return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t plus = std::min(text.find('+', start), text.size());
        const std::string term = trim(text.substr(start, plus - start));
        loophom::Monomial m(n, 0);
        if (term != "1") {
            std::size_t f = 0;
            while (f <= term.size()) {
                const std::size_t star = std::min(term.find('*', f), term.size());
                const std::string factor = term.substr(f, star - f);
                const std::size_t caret = factor.find('^');
                const std::string name = factor.substr(0, caret);
                const int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
                m[st.index_of(name)] += static_cast<std::uint16_t>(e);
                f = star + 1;
            }
        }
        out.toggle(m);
        start = plus + 1;
    }
    return out;
}

struct Pres {
    const loophom::Presentation& p;
    std::size_t generators_count() const { return p.size(); }
    std::size_t index_of(const std::string& s) const { return p.index_of(s); }
};
struct Ring {
    const loophom::CommutativeRing& r;
    std::size_t generators_count() const { return r.variables().size(); }
    std::size_t index_of(const std::string& s) const { return r.index_of(s); }
};

inline loophom::Element el(const loophom::Presentation& p, const std::string& t) { return element(Pres{p}, t); }
inline loophom::Element el(const loophom::CommutativeRing& r, const std::string& t) { return element(Ring{r}, t); }
inline loophom::Monomial mono(const loophom::Presentation& p, const std::string& t) { return *el(p, t).begin(); }
inline loophom::Monomial mono(const loophom::CommutativeRing& r, const std::string& t) { return *el(r, t).begin(); }

// Coefficientwise product of the series of the given generators, computed by
// direct convolution; an oracle independent of PBW enumeration.
inline loophom::GradedDims series_oracle(const std::vector<std::pair<int, int>>& degree_height, int cap)
{
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(cap + 1), 0);
    acc[0] = 1;
    for (auto [d, h] : degree_height) {
        std::vector<std::uint64_t> next(acc.size(), 0);
        for (int n = 0; n <= cap; ++n)
            for (int e = 0; (h == 0 || e < h) && n + e * d <= cap; ++e)
                next[static_cast<std::size_t>(n + e * d)] += acc[static_cast<std::size_t>(n)];
        acc = std::move(next);
    }
    return loophom::GradedDims(std::move(acc));
}

}  // namespace support
