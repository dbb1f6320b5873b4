// Compiled with -mavx2 -mbmi2; only reached after a runtime CPU check.

#include "autsys/kernels.hpp"

#include <immintrin.h>

namespace autsys::kernels {
namespace {

inline __m256i load4(const Subset* p)
{
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline std::uint64_t or_lanes(__m256i v)
{
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i x = _mm_or_si128(lo, hi);
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(x)) | static_cast<std::uint64_t>(_mm_extract_epi64(x, 1));
}

inline std::uint64_t and_lanes(__m256i v)
{
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i x = _mm_and_si128(lo, hi);
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(x)) & static_cast<std::uint64_t>(_mm_extract_epi64(x, 1));
}

Subset union_within_avx2(std::span<const Subset> family, Subset within)
{
    const __m256i zero = _mm256_setzero_si256();
    const __m256i inside = _mm256_set1_epi64x(static_cast<long long>(within.bits()));
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 4 <= family.size(); i += 4) {
        __m256i m = load4(family.data() + i);
        // lanes where m & ~within == 0
        __m256i ok = _mm256_cmpeq_epi64(_mm256_andnot_si256(inside, m), zero);
        acc = _mm256_or_si256(acc, _mm256_and_si256(m, ok));
    }
    std::uint64_t out = or_lanes(acc);
    for (; i < family.size(); ++i)
        if (family[i].subset_of(within))
            out |= family[i].bits();
    return Subset{out};
}

Subset meet_containing_avx2(std::span<const Subset> family, Subset within, Subset required, Subset init)
{
    const __m256i zero = _mm256_setzero_si256();
    const __m256i inside = _mm256_set1_epi64x(static_cast<long long>(within.bits()));
    const __m256i need = _mm256_set1_epi64x(static_cast<long long>(required.bits()));
    __m256i acc = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= family.size(); i += 4) {
        __m256i m = load4(family.data() + i);
        __m256i in_within = _mm256_cmpeq_epi64(_mm256_andnot_si256(inside, m), zero);
        __m256i has_need = _mm256_cmpeq_epi64(_mm256_andnot_si256(m, need), zero);
        __m256i ok = _mm256_and_si256(in_within, has_need);
        // non-qualifying lanes contribute all ones
        acc = _mm256_and_si256(acc, _mm256_or_si256(m, _mm256_xor_si256(ok, _mm256_set1_epi64x(-1))));
    }
    std::uint64_t out = init.bits() & and_lanes(acc);
    for (; i < family.size(); ++i)
        if (family[i].subset_of(within) && required.subset_of(family[i]))
            out &= family[i].bits();
    return Subset{out};
}

void compress_bmi2(std::span<const Subset> members, Subset drop, std::span<Subset> out)
{
    const std::uint64_t keep = ~drop.bits();
    for (std::size_t i = 0; i < members.size(); ++i)
        out[i] = Subset{_pext_u64(members[i].bits(), keep)};
}

constexpr Table kAvx2{Backend::Avx2, &union_within_avx2, &meet_containing_avx2, &compress_bmi2};

} // namespace

const Table& detail::avx2_table() noexcept { return kAvx2; }

} // namespace autsys::kernels
