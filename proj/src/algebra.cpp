#include "loophom/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace loophom {

namespace {

constexpr int kMaxRewriteDepth = 20000;

std::optional<std::size_t> last_nonzero(const Monomial& m)
{
    for (std::size_t i = m.size(); i-- > 0;)
        if (m[i])
            return i;
    return std::nullopt;
}

}  // namespace

Presentation::Presentation(std::string name, std::vector<GeneratorSpec> generators)
    : name_(std::move(name)), gens_(std::move(generators))
{
    std::stable_sort(gens_.begin(), gens_.end(),
                     [](const GeneratorSpec& a, const GeneratorSpec& b) { return a.degree < b.degree; });
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.degree < 1)
            throw std::invalid_argument("generator " + g.name + " must have positive degree");
        if (g.height == 1 || g.height < 0)
            throw std::invalid_argument("generator " + g.name + " has invalid height");
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("duplicate generator " + g.name);
    }
}

std::optional<std::size_t> Presentation::find(const std::string& name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t Presentation::index_of(const std::string& name) const
{
    if (auto i = find(name))
        return *i;
    throw UnknownGenerator("unknown generator '" + name + "'");
}

int Presentation::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        d += m[i] * gens_[i].degree;
    return d;
}

std::optional<int> Presentation::degree(const Element& e) const
{
    std::optional<int> d;
    for (const auto& m : e) {
        const int dm = degree(m);
        if (d && *d != dm)
            throw InhomogeneousRelation("element " + format(e) + " is not homogeneous");
        d = dm;
    }
    return d;
}

Monomial Presentation::generator_monomial(std::size_t i) const
{
    Monomial m = unit();
    m.at(i) = 1;
    return m;
}

bool Presentation::is_normal(const Monomial& m) const
{
    if (m.size() != gens_.size())
        return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (gens_[i].height && m[i] >= gens_[i].height)
            return false;
    return true;
}

void Presentation::set_commutator(std::size_t a, std::size_t b, Element value)
{
    if (a == b)
        throw std::invalid_argument("commutator of a generator with itself");
    if (a >= gens_.size() || b >= gens_.size())
        throw UnknownGenerator("commutator index out of range");
    const int expected = gens_[a].degree + gens_[b].degree;
    for (const auto& m : value) {
        if (!is_normal(m))
            throw std::invalid_argument("commutator value " + format(value) + " is not in normal form");
        if (degree(m) != expected)
            throw InhomogeneousRelation("[" + gens_[a].name + "," + gens_[b].name + "] has degree " +
                                        std::to_string(expected) + " but term " + format(m) + " has degree " +
                                        std::to_string(degree(m)));
    }
    const auto key = std::minmax(a, b);
    if (value.is_zero())
        comms_.erase(key);
    else
        comms_[key] = std::move(value);
}

const Element& Presentation::commutator(std::size_t i, std::size_t j) const
{
    auto it = comms_.find(std::minmax(i, j));
    return it == comms_.end() ? zero_ : it->second;
}

std::vector<std::size_t> Presentation::word_of(const Monomial& m) const
{
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e)
            w.push_back(i);
    return w;
}

std::string Presentation::format(const Monomial& m) const
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i])
            continue;
        if (!out.empty())
            out += '*';
        out += gens_[i].name;
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string Presentation::format(const Element& e) const
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& m : e) {
        if (!out.empty())
            out += " + ";
        out += format(m);
    }
    return out;
}

std::string Presentation::format_word(const std::vector<std::size_t>& word) const
{
    std::string out;
    for (auto i : word) {
        if (!out.empty())
            out += '.';
        out += gens_.at(i).name;
    }
    return out.empty() ? "1" : out;
}

Algebra::Algebra(Presentation pres) : pres_(std::move(pres)) {}

const Element& Algebra::times_generator(const Monomial& m, std::size_t g)
{
    const auto key = std::make_pair(m, g);
    if (auto it = mult_cache_.find(key); it != mult_cache_.end())
        return it->second;
    if (++depth_ > kMaxRewriteDepth) {
        depth_ = 0;
        throw RewriteDiverged("rewriting did not terminate within the depth budget");
    }

    Element result;
    const auto last = last_nonzero(m);
    const auto& spec = pres_.generator(g);
    if (!last || g > *last) {
        Monomial out = m;
        out[g] = 1;
        result.toggle(out);
    } else if (g == *last) {
        if (!spec.height || m[g] + 1 < spec.height) {
            Monomial out = m;
            ++out[g];
            result.toggle(out);
        }
    } else {
        // m = p * g_k with k > g:  p g_k g = p g g_k + p c_{g,k}
        const std::size_t k = *last;
        Monomial p = m;
        --p[k];
        const Element pg = times_generator(p, g);
        for (const auto& t : pg)
            result += times_generator(t, k);
        const Element& c = pres_.commutator(g, k);
        if (!c.is_zero())
            result += multiply(Element(p), c);
    }
    --depth_;
    return mult_cache_.emplace(key, std::move(result)).first->second;
}

Element Algebra::word_times(Element e, const std::vector<std::size_t>& word)
{
    for (auto g : word) {
        Element next;
        for (const auto& t : e)
            next += times_generator(t, g);
        e = std::move(next);
        if (e.is_zero())
            break;
    }
    return e;
}

Element Algebra::multiply(const Monomial& a, const Monomial& b) { return word_times(Element(a), pres_.word_of(b)); }

Element Algebra::multiply(const Element& a, const Monomial& b) { return word_times(a, pres_.word_of(b)); }

Element Algebra::multiply(const Element& a, const Element& b)
{
    Element out;
    for (const auto& m : b)
        out += multiply(a, m);
    return out;
}

Element Algebra::normal_form(const std::vector<std::size_t>& word)
{
    for (auto g : word)
        if (g >= pres_.size())
            throw UnknownGenerator("generator index out of range");
    return word_times(Element(pres_.unit()), word);
}

Element Algebra::normal_form(const std::vector<std::string>& names)
{
    std::vector<std::size_t> word;
    word.reserve(names.size());
    for (const auto& n : names)
        word.push_back(pres_.index_of(n));
    return normal_form(word);
}

std::vector<Monomial> Algebra::basis_in_degree(int n) const
{
    std::vector<Monomial> out;
    if (n < 0)
        return out;
    Monomial cur = pres_.unit();
    const auto& gens = pres_.generators();
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == gens.size()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        for (int e = 0; e * gens[i].degree <= remaining; ++e) {
            if (gens[i].height && e >= gens[i].height)
                break;
            cur[i] = static_cast<std::uint16_t>(e);
            rec(i + 1, remaining - e * gens[i].degree);
        }
        cur[i] = 0;
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<Monomial, std::size_t> Algebra::basis_index(int n) const
{
    std::map<Monomial, std::size_t> idx;
    for (const auto& m : basis_in_degree(n))
        idx.emplace(m, idx.size());
    return idx;
}

GradedDims Algebra::poincare(int cap) const
{
    GradedDims dims(cap);
    for (int n = 0; n <= cap; ++n)
        dims[n] = basis_in_degree(n).size();
    return dims;
}

ConfluenceReport Algebra::check_confluence(int cap)
{
    ConfluenceReport report;
    const auto& gens = pres_.generators();
    const std::size_t n = gens.size();
    auto gen = [&](std::size_t i) { return Element(pres_.generator_monomial(i)); };

    auto record = [&](std::vector<std::size_t> word, int degree, const Element& left, const Element& right) {
        ++report.overlaps_checked;
        if (left != right)
            report.failures.push_back({std::move(word), degree, left + right});
    };

    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            for (std::size_t i = 0; i <= j; ++i) {
                const int deg = gens[k].degree + gens[j].degree + gens[i].degree;
                if (deg > cap)
                    continue;
                if (k > j && j > i) {
                    // (g_k g_j) g_i versus g_k (g_j g_i)
                    Element left = normal_form({j, k, i}) + multiply(pres_.commutator(j, k), pres_.generator_monomial(i));
                    Element right = normal_form({k, i, j}) + multiply(gen(k), pres_.commutator(i, j));
                    record({k, j, i}, deg, left, right);
                }
            }
        }
    }

    // Overlaps with the height rules g^h -> 0.
    for (std::size_t j = 0; j < n; ++j) {
        const int h = gens[j].height;
        if (!h)
            continue;
        const int power_deg = h * gens[j].degree;
        for (std::size_t i = 0; i < j; ++i) {
            const int deg = power_deg + gens[i].degree;
            if (deg > cap)
                continue;
            // g_j^h g_i: left kills the power, right commutes g_j g_i first.
            std::vector<std::size_t> word(static_cast<std::size_t>(h - 1), j);
            word.push_back(i);
            word.push_back(j);
            Element prefix = normal_form(std::vector<std::size_t>(static_cast<std::size_t>(h - 1), j));
            Element right = normal_form(word) + multiply(prefix, pres_.commutator(i, j));
            std::vector<std::size_t> overlap(static_cast<std::size_t>(h), j);
            overlap.push_back(i);
            record(overlap, deg, Element(), right);
        }
        for (std::size_t k = j + 1; k < n; ++k) {
            const int deg = power_deg + gens[k].degree;
            if (deg > cap)
                continue;
            // g_k g_j^h: left commutes g_k g_j first, right kills the power.
            std::vector<std::size_t> word{j, k};
            word.insert(word.end(), static_cast<std::size_t>(h - 1), j);
            Element tail = normal_form(std::vector<std::size_t>(static_cast<std::size_t>(h - 1), j));
            Element left = normal_form(word) + multiply(pres_.commutator(j, k), tail);
            std::vector<std::size_t> overlap{k};
            overlap.insert(overlap.end(), static_cast<std::size_t>(h), j);
            record(overlap, deg, left, Element());
        }
    }

    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const ConfluenceFailure& a, const ConfluenceFailure& b) { return a.degree < b.degree; });
    return report;
}

}  // namespace loophom
