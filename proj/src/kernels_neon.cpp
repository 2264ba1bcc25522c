// NEON kernel variants (aarch64). Same exact-arithmetic contracts as the
// scalar reference; see kernels_avx2.cpp for the magic-division ranges.

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include "morsegrid/kernels.hpp"

namespace morsegrid::kernels {

namespace {

// Divide 8 u16 lanes by a constant via magic multiply/shift, narrow to u8.
template <int Shift>
inline uint8x8_t div_and_narrow(uint16x8_t t, std::uint16_t magic)
{
    uint32x4_t const qlo = vshrq_n_u32(vmull_n_u16(vget_low_u16(t), magic),
                                       Shift);
    uint32x4_t const qhi = vshrq_n_u32(vmull_n_u16(vget_high_u16(t), magic),
                                       Shift);
    return vmovn_u16(vcombine_u16(vmovn_u32(qlo), vmovn_u32(qhi)));
}

void gray_average_neon(std::uint8_t const* r, std::uint8_t const* g,
                       std::uint8_t const* b, std::uint8_t* out,
                       std::size_t n)
{
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t s = vaddl_u8(vld1_u8(r + i), vld1_u8(g + i));
        s = vaddw_u8(s, vld1_u8(b + i));
        uint16x8_t const t = vaddq_u16(vshlq_n_u16(s, 1), vdupq_n_u16(3));
        vst1_u8(out + i, div_and_narrow<18>(t, 43691));
    }
    if (i < n)
        scalar().gray_average(r + i, g + i, b + i, out + i, n - i);
}

void gray_luminosity_neon(std::uint8_t const* r, std::uint8_t const* g,
                          std::uint8_t const* b, std::uint8_t* out,
                          std::size_t n)
{
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t t = vmull_u8(vld1_u8(r + i), vdup_n_u8(21));
        t = vmlal_u8(t, vld1_u8(g + i), vdup_n_u8(72));
        t = vmlal_u8(t, vld1_u8(b + i), vdup_n_u8(7));
        t = vaddq_u16(t, vdupq_n_u16(50));
        vst1_u8(out + i, div_and_narrow<22>(t, 41944));
    }
    if (i < n)
        scalar().gray_luminosity(r + i, g + i, b + i, out + i, n - i);
}

void mask_accumulate_neon(std::uint8_t const* r, std::uint8_t const* g,
                          std::uint8_t const* b, std::uint8_t* hit,
                          std::size_t n, Rgb bg, std::uint8_t tol)
{
    std::size_t i = 0;
    uint8x16_t const tv = vdupq_n_u8(tol);
    for (; i + 16 <= n; i += 16) {
        uint8x16_t const inr =
            vcleq_u8(vabdq_u8(vld1q_u8(r + i), vdupq_n_u8(bg.r)), tv);
        uint8x16_t const ing =
            vcleq_u8(vabdq_u8(vld1q_u8(g + i), vdupq_n_u8(bg.g)), tv);
        uint8x16_t const inb =
            vcleq_u8(vabdq_u8(vld1q_u8(b + i), vdupq_n_u8(bg.b)), tv);
        uint8x16_t const all = vandq_u8(vandq_u8(inr, ing), inb);
        vst1q_u8(hit + i, vorrq_u8(vld1q_u8(hit + i), all));
    }
    if (i < n)
        scalar().mask_accumulate(r + i, g + i, b + i, hit + i, n - i, bg, tol);
}

void mask_apply_neon(std::uint8_t* r, std::uint8_t* g, std::uint8_t* b,
                     std::uint8_t const* hit, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t const keep = vceqq_u8(vld1q_u8(hit + i), vdupq_n_u8(0));
        vst1q_u8(r + i, vandq_u8(vld1q_u8(r + i), keep));
        vst1q_u8(g + i, vandq_u8(vld1q_u8(g + i), keep));
        vst1q_u8(b + i, vandq_u8(vld1q_u8(b + i), keep));
    }
    if (i < n)
        scalar().mask_apply(r + i, g + i, b + i, hit + i, n - i);
}

void pairwise_max_neon(std::uint8_t const* a, std::uint8_t const* b,
                       std::uint8_t* out, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16)
        vst1q_u8(out + i, vmaxq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
    if (i < n)
        scalar().pairwise_max(a + i, b + i, out + i, n - i);
}

void adjacent_max_neon(std::uint8_t const* v, std::uint8_t* out,
                       std::size_t n)
{
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16)
        vst1q_u8(out + i, vmaxq_u8(vld1q_u8(v + i), vld1q_u8(v + i + 1)));
    if (i < n)
        scalar().adjacent_max(v + i, out + i, n - i);
}

} // namespace

Table const& neon_table()
{
    static Table const table{
        "neon",
        gray_average_neon,
        gray_luminosity_neon,
        mask_accumulate_neon,
        mask_apply_neon,
        pairwise_max_neon,
        adjacent_max_neon,
    };
    return table;
}

} // namespace morsegrid::kernels

#endif // aarch64 / NEON
