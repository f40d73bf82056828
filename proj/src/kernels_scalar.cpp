#include "loophom/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

namespace loophom::kernels {

void xor_into_scalar(std::span<Word> dst, std::span<const Word> src)
{
    const std::size_t n = std::min(dst.size(), src.size());
    for (std::size_t i = 0; i < n; ++i)
        dst[i] ^= src[i];
}

bool is_zero_scalar(std::span<const Word> row)
{
    Word acc = 0;
    for (Word w : row)
        acc |= w;
    return acc == 0;
}

std::size_t popcount_scalar(std::span<const Word> row)
{
    std::size_t n = 0;
    for (Word w : row)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

namespace {

Isa detect()
{
#if LOOPHOM_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2"))
        return Isa::avx2;
#endif
    return Isa::scalar;
}

std::atomic<Isa>& selected()
{
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

bool isa_supported(Isa isa)
{
    if (isa == Isa::scalar)
        return true;
    return detect() == Isa::avx2;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa)
{
    selected().store(isa_supported(isa) ? isa : Isa::scalar, std::memory_order_relaxed);
}

void reset_isa() { selected().store(detect(), std::memory_order_relaxed); }

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

void xor_into(std::span<Word> dst, std::span<const Word> src)
{
#if LOOPHOM_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::avx2)
        return xor_into_avx2(dst, src);
#endif
    xor_into_scalar(dst, src);
}

bool is_zero(std::span<const Word> row)
{
#if LOOPHOM_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::avx2)
        return is_zero_avx2(row);
#endif
    return is_zero_scalar(row);
}

std::size_t popcount(std::span<const Word> row)
{
#if LOOPHOM_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::avx2)
        return popcount_avx2(row);
#endif
    return popcount_scalar(row);
}

}  // namespace loophom::kernels
