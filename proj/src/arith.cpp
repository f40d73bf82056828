#include "loophom/arith.hpp"

#include <bit>
#include <cctype>

namespace loophom {

int nu2(std::uint64_t n) { return n == 0 ? 64 : std::countr_zero(n); }

int nu2_power_minus_one(std::uint64_t q, unsigned i)
{
    std::uint64_t p = 1;
    for (unsigned k = 0; k < i; ++k)
        p *= q;  // wraps mod 2^64
    return nu2(p - 1);
}

BocksteinExponents bockstein_exponents(std::uint64_t q)
{
    if (q < 3 || q % 2 == 0)
        throw EvenInput("q must be odd and at least 3, got " + std::to_string(q));
    return {nu2_power_minus_one(q, 2), nu2_power_minus_one(q, 4), nu2_power_minus_one(q, 6),
            nu2_power_minus_one(q, 14)};
}

bool exponent_identities_hold(std::uint64_t q)
{
    const auto r = bockstein_exponents(q);
    const std::uint64_t k = q % 4 == 1 ? (q - 1) / 4 : (q + 1) / 4;
    return r.r2 == r.r6 && r.r6 == r.r14 && r.r4 == r.r2 + 1 && r.r2 == nu2(k) + 3;
}

int resolve_page(const std::string& label, const BocksteinExponents& r)
{
    std::size_t pos = 0;
    int base = 0;
    auto bad = [&]() { return std::invalid_argument("bad page label '" + label + "'"); };
    if (label.empty())
        throw bad();
    if (label[0] == 'r') {
        std::size_t end = 1;
        while (end < label.size() && std::isdigit(static_cast<unsigned char>(label[end])))
            ++end;
        const std::string idx = label.substr(1, end - 1);
        if (idx == "2")
            base = r.r2;
        else if (idx == "4")
            base = r.r4;
        else if (idx == "6")
            base = r.r6;
        else if (idx == "14")
            base = r.r14;
        else
            throw bad();
        pos = end;
    }
    int offset = 0;
    if (pos < label.size()) {
        std::size_t used = 0;
        try {
            offset = std::stoi(label.substr(pos), &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != label.size() - pos || (pos > 0 && label[pos] != '+' && label[pos] != '-'))
            throw bad();
    }
    return base + offset;
}

}  // namespace loophom
