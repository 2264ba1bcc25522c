// AVX2 kernel variants. This translation unit is compiled with -mavx2 on
// x86-64 only; callers reach it through the runtime-dispatched table.
//
// The division steps use magic-constant multiply/shift pairs that are
// exact over the full input range:
//   average:    t = 2(r+g+b)+3 <= 1533,  t/6   == (t * 43691) >> 18
//   luminosity: t = 21r+72g+7b+50 <= 25550, t/100 == (t * 41944) >> 22
// Both identities are swept exhaustively in the kernel tests.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "morsegrid/kernels.hpp"

namespace morsegrid::kernels {

namespace {

// 16 u16 lanes -> divide by constant via 32-bit magic multiply, return
// 16 u8 results in order.
template <int Shift>
inline __m128i div_and_narrow(__m256i t16, std::int32_t magic)
{
    __m256i const m = _mm256_set1_epi32(magic);
    __m256i const lo =
        _mm256_cvtepu16_epi32(_mm256_castsi256_si128(t16));
    __m256i const hi =
        _mm256_cvtepu16_epi32(_mm256_extracti128_si256(t16, 1));
    __m256i const qlo = _mm256_srli_epi32(_mm256_mullo_epi32(lo, m), Shift);
    __m256i const qhi = _mm256_srli_epi32(_mm256_mullo_epi32(hi, m), Shift);
    // packus interleaves 128-bit lanes; permute restores element order.
    __m256i const packed = _mm256_permute4x64_epi64(
        _mm256_packus_epi32(qlo, qhi), 0xD8);
    return _mm_packus_epi16(_mm256_castsi256_si128(packed),
                            _mm256_extracti128_si256(packed, 1));
}

void gray_average_avx2(std::uint8_t const* r, std::uint8_t const* g,
                       std::uint8_t const* b, std::uint8_t* out,
                       std::size_t n)
{
    std::size_t i = 0;
    __m256i const three = _mm256_set1_epi16(3);
    for (; i + 16 <= n; i += 16) {
        __m256i const r16 = _mm256_cvtepu8_epi16(
            _mm_loadu_si128(reinterpret_cast<__m128i const*>(r + i)));
        __m256i const g16 = _mm256_cvtepu8_epi16(
            _mm_loadu_si128(reinterpret_cast<__m128i const*>(g + i)));
        __m256i const b16 = _mm256_cvtepu8_epi16(
            _mm_loadu_si128(reinterpret_cast<__m128i const*>(b + i)));
        __m256i const s = _mm256_add_epi16(_mm256_add_epi16(r16, g16), b16);
        __m256i const t = _mm256_add_epi16(_mm256_slli_epi16(s, 1), three);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i),
                         div_and_narrow<18>(t, 43691));
    }
    if (i < n)
        scalar().gray_average(r + i, g + i, b + i, out + i, n - i);
}

void gray_luminosity_avx2(std::uint8_t const* r, std::uint8_t const* g,
                          std::uint8_t const* b, std::uint8_t* out,
                          std::size_t n)
{
    std::size_t i = 0;
    __m256i const wr = _mm256_set1_epi16(21);
    __m256i const wg = _mm256_set1_epi16(72);
    __m256i const wb = _mm256_set1_epi16(7);
    __m256i const half = _mm256_set1_epi16(50);
    for (; i + 16 <= n; i += 16) {
        __m256i const r16 = _mm256_cvtepu8_epi16(
            _mm_loadu_si128(reinterpret_cast<__m128i const*>(r + i)));
        __m256i const g16 = _mm256_cvtepu8_epi16(
            _mm_loadu_si128(reinterpret_cast<__m128i const*>(g + i)));
        __m256i const b16 = _mm256_cvtepu8_epi16(
            _mm_loadu_si128(reinterpret_cast<__m128i const*>(b + i)));
        __m256i t = _mm256_mullo_epi16(r16, wr);
        t = _mm256_add_epi16(t, _mm256_mullo_epi16(g16, wg));
        t = _mm256_add_epi16(t, _mm256_mullo_epi16(b16, wb));
        t = _mm256_add_epi16(t, half);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i),
                         div_and_narrow<22>(t, 41944));
    }
    if (i < n)
        scalar().gray_luminosity(r + i, g + i, b + i, out + i, n - i);
}

inline __m256i within_tol(__m256i x, __m256i bg, __m256i tol)
{
    __m256i const diff = _mm256_or_si256(_mm256_subs_epu8(x, bg),
                                         _mm256_subs_epu8(bg, x));
    return _mm256_cmpeq_epi8(_mm256_subs_epu8(diff, tol),
                             _mm256_setzero_si256());
}

void mask_accumulate_avx2(std::uint8_t const* r, std::uint8_t const* g,
                          std::uint8_t const* b, std::uint8_t* hit,
                          std::size_t n, Rgb bg, std::uint8_t tol)
{
    std::size_t i = 0;
    __m256i const br = _mm256_set1_epi8(static_cast<char>(bg.r));
    __m256i const bgc = _mm256_set1_epi8(static_cast<char>(bg.g));
    __m256i const bb = _mm256_set1_epi8(static_cast<char>(bg.b));
    __m256i const tv = _mm256_set1_epi8(static_cast<char>(tol));
    for (; i + 32 <= n; i += 32) {
        __m256i const xr =
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(r + i));
        __m256i const xg =
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(g + i));
        __m256i const xb =
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
        __m256i const all = _mm256_and_si256(
            _mm256_and_si256(within_tol(xr, br, tv), within_tol(xg, bgc, tv)),
            within_tol(xb, bb, tv));
        __m256i const prev =
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(hit + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(hit + i),
                            _mm256_or_si256(prev, all));
    }
    if (i < n)
        scalar().mask_accumulate(r + i, g + i, b + i, hit + i, n - i, bg, tol);
}

void mask_apply_avx2(std::uint8_t* r, std::uint8_t* g, std::uint8_t* b,
                     std::uint8_t const* hit, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i const keep = _mm256_cmpeq_epi8(
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(hit + i)),
            _mm256_setzero_si256());
        auto apply = [&](std::uint8_t* p) {
            __m256i const x =
                _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + i),
                                _mm256_and_si256(x, keep));
        };
        apply(r);
        apply(g);
        apply(b);
    }
    if (i < n)
        scalar().mask_apply(r + i, g + i, b + i, hit + i, n - i);
}

void pairwise_max_avx2(std::uint8_t const* a, std::uint8_t const* b,
                       std::uint8_t* out, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i const x =
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
        __m256i const y =
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                            _mm256_max_epu8(x, y));
    }
    if (i < n)
        scalar().pairwise_max(a + i, b + i, out + i, n - i);
}

void adjacent_max_avx2(std::uint8_t const* v, std::uint8_t* out,
                       std::size_t n)
{
    // v has n+1 elements, so reading 32 bytes at v+i+1 needs i+32 <= n.
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i const x =
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(v + i));
        __m256i const y =
            _mm256_loadu_si256(reinterpret_cast<__m256i const*>(v + i + 1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                            _mm256_max_epu8(x, y));
    }
    if (i < n)
        scalar().adjacent_max(v + i, out + i, n - i);
}

} // namespace

Table const& avx2_table()
{
    static Table const table{
        "avx2",
        gray_average_avx2,
        gray_luminosity_avx2,
        mask_accumulate_avx2,
        mask_apply_avx2,
        pairwise_max_avx2,
        adjacent_max_avx2,
    };
    return table;
}

} // namespace morsegrid::kernels

#endif // x86-64
