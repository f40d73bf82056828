// Compiled with -mavx2; only reached after a runtime CPU check.
#include "loophom/kernels.hpp"

#if LOOPHOM_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace loophom::kernels {

void xor_into_avx2(std::span<Word> dst, std::span<const Word> src)
{
    const std::size_t n = std::min(dst.size(), src.size());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

bool is_zero_avx2(std::span<const Word> row)
{
    const std::size_t n = row.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i)));
    Word tail = 0;
    for (; i < n; ++i)
        tail |= row[i];
    return _mm256_testz_si256(acc, acc) != 0 && tail == 0;
}

std::size_t popcount_avx2(std::span<const Word> row)
{
    // Nibble lookup popcount (Mula); accumulates byte counts with SAD.
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i total = _mm256_setzero_si256();
    const std::size_t n = row.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i));
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        total = _mm256_add_epi64(total, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) Word lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
    std::size_t count = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
    for (; i < n; ++i)
        count += static_cast<std::size_t>(std::popcount(row[i]));
    return count;
}

}  // namespace loophom::kernels

#endif
