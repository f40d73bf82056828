#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loophom/kernels.hpp"
#include "support.hpp"

using namespace loophom;
using kernels::Word;

namespace {

std::vector<Word> random_words(support::Rng& rng, std::size_t n, bool sparse)
{
    std::vector<Word> w(n);
    for (auto& x : w)
        x = sparse && support::coin(rng, 0.8) ? 0 : rng();
    return w;
}

struct IsaGuard {
    ~IsaGuard() { kernels::reset_isa(); }
};

}  // namespace

TEST_CASE("scalar kernels on hand examples")
{
    std::vector<Word> a{0b1010, 0, ~Word{0}};
    const std::vector<Word> b{0b0110, 1, ~Word{0}};
    kernels::xor_into_scalar(a, b);
    CHECK(a == std::vector<Word>{0b1100, 1, 0});
    CHECK(kernels::popcount_scalar(a) == 3);
    CHECK_FALSE(kernels::is_zero_scalar(a));
    CHECK(kernels::is_zero_scalar(std::vector<Word>(9, 0)));
    CHECK(kernels::is_zero_scalar(std::span<const Word>{}));
}

#if LOOPHOM_HAVE_AVX2_KERNELS
TEST_CASE("avx2 kernels agree with the scalar reference")
{
    if (!kernels::isa_supported(kernels::Isa::avx2)) {
        MESSAGE("CPU lacks AVX2; equivalence not exercised");
        return;
    }
    support::Rng rng(7);
    // Lengths straddle the 4-word vector width, with unaligned starting offsets.
    for (std::size_t len = 0; len <= 41; ++len) {
        for (std::size_t offset = 0; offset < 3; ++offset) {
            for (bool sparse : {false, true}) {
                auto src = random_words(rng, len + offset, sparse);
                auto dst = random_words(rng, len + offset, sparse);
                auto ref = dst;
                std::span<const Word> s(src.data() + offset, len);
                kernels::xor_into_scalar(std::span<Word>(ref.data() + offset, len), s);
                kernels::xor_into_avx2(std::span<Word>(dst.data() + offset, len), s);
                REQUIRE(dst == ref);

                std::span<const Word> row(src.data() + offset, len);
                CHECK(kernels::popcount_avx2(row) == kernels::popcount_scalar(row));
                CHECK(kernels::is_zero_avx2(row) == kernels::is_zero_scalar(row));
            }
        }
    }
    // A single set bit anywhere must be seen.
    for (std::size_t len = 1; len <= 17; ++len)
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<Word> w(len, 0);
            w[i] = Word{1} << (i % 64);
            CHECK_FALSE(kernels::is_zero_avx2(w));
            CHECK(kernels::popcount_avx2(w) == 1);
        }
}
#endif

TEST_CASE("dispatch can be forced and reset")
{
    IsaGuard guard;
    kernels::force_isa(kernels::Isa::scalar);
    CHECK(kernels::active_isa() == kernels::Isa::scalar);
    kernels::force_isa(kernels::Isa::avx2);
    CHECK(kernels::active_isa() ==
          (kernels::isa_supported(kernels::Isa::avx2) ? kernels::Isa::avx2 : kernels::Isa::scalar));
    kernels::reset_isa();
    CHECK(kernels::isa_name(kernels::Isa::scalar) == "scalar");
}

TEST_CASE("rank and kernels are identical under every ISA")
{
    IsaGuard guard;
    support::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = support::random_matrix(rng, 1 + support::below(rng, 90), 1 + support::below(rng, 300),
                                              trial % 3 == 0 ? 0.05 : 0.5);
        kernels::force_isa(kernels::Isa::scalar);
        const auto r_scalar = gf2::rank(m);
        const auto k_scalar = gf2::kernel_basis(m);
        kernels::force_isa(kernels::Isa::avx2);
        CHECK(gf2::rank(m) == r_scalar);
        CHECK(gf2::kernel_basis(m) == k_scalar);
        CHECK(r_scalar == support::naive_rank(support::to_rows(m)));
    }
}
