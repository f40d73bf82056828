#pragma once
// 2-adic valuations r_i = nu_2(q^i - 1) that index the Bockstein pages.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loophom {

class EvenInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// nu_2(n); nu_2(0) is reported as 64.
int nu2(std::uint64_t n);
// nu_2(q^i - 1), exact because only the low 64 bits matter.
int nu2_power_minus_one(std::uint64_t q, unsigned i);

struct BocksteinExponents {
    int r2 = 0, r4 = 0, r6 = 0, r14 = 0;
    friend bool operator==(const BocksteinExponents&, const BocksteinExponents&) = default;
};

/// Throws EvenInput unless q is odd and at least 3.
BocksteinExponents bockstein_exponents(std::uint64_t q);

/// r2 = r6 = r14, r4 = r2 + 1 and r2 = nu_2(k) + 3 where q = 4k +- 1.
bool exponent_identities_hold(std::uint64_t q);

/// Resolves a page label such as "1", "r2", "r2+1" or "r4-1" to a page number.
int resolve_page(const std::string& label, const BocksteinExponents& r);

}  // namespace loophom
