#pragma once
// Word-parallel GF(2) row kernels with a scalar reference and an AVX2 variant.
//
// The scalar functions are the reference semantics; every vector variant must
// agree with them bit for bit (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace loophom::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

// dst ^= src over the common length.
void xor_into_scalar(std::span<Word> dst, std::span<const Word> src);
// true iff every word is zero.
bool is_zero_scalar(std::span<const Word> row);
// Number of set bits.
std::size_t popcount_scalar(std::span<const Word> row);

#if defined(__x86_64__) || defined(_M_X64)
#define LOOPHOM_HAVE_AVX2_KERNELS 1
void xor_into_avx2(std::span<Word> dst, std::span<const Word> src);
bool is_zero_avx2(std::span<const Word> row);
std::size_t popcount_avx2(std::span<const Word> row);
#else
#define LOOPHOM_HAVE_AVX2_KERNELS 0
#endif

// Runtime-selected entry points.
void xor_into(std::span<Word> dst, std::span<const Word> src);
bool is_zero(std::span<const Word> row);
std::size_t popcount(std::span<const Word> row);

// The instruction set the dispatched entry points currently use.
Isa active_isa();
// True when the CPU supports the given variant.
bool isa_supported(Isa isa);
// Forces a variant (tests and benchmarks). Unsupported requests fall back to scalar.
void force_isa(Isa isa);
// Restores CPU-detected selection.
void reset_isa();

std::string_view isa_name(Isa isa);

}  // namespace loophom::kernels
