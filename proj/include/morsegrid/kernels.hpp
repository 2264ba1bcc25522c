// kernels.hpp
//
// Data-parallel inner loops over planar 8-bit channel buffers: grayscale
// conversion, background-mask tests, and the pairwise/adjacent maxima used
// to assign filtration values to edges and squares.
//
// Every kernel has a scalar reference implementation; AVX2 and NEON
// variants are selected at runtime and must produce bit-identical output
// (enforced by the equivalence tests). All integer arithmetic rounds
// half-up, so SIMD variants use exact magic-constant division, never
// floating point.

#ifndef MORSEGRID_KERNELS_HPP
#define MORSEGRID_KERNELS_HPP

#include <cstddef>
#include <cstdint>

#include "morsegrid/image.hpp"

namespace morsegrid::kernels {

struct Table {
    char const* name;

    // out[i] = round((r+g+b)/3)
    void (*gray_average)(std::uint8_t const* r, std::uint8_t const* g,
                         std::uint8_t const* b, std::uint8_t* out,
                         std::size_t n);

    // out[i] = round(0.21 r + 0.72 g + 0.07 b), evaluated as
    // (21r + 72g + 7b + 50) / 100 in integers
    void (*gray_luminosity)(std::uint8_t const* r, std::uint8_t const* g,
                            std::uint8_t const* b, std::uint8_t* out,
                            std::size_t n);

    // hit[i] |= 0xFF where |r-bg.r|, |g-bg.g|, |b-bg.b| are all <= tol
    void (*mask_accumulate)(std::uint8_t const* r, std::uint8_t const* g,
                            std::uint8_t const* b, std::uint8_t* hit,
                            std::size_t n, Rgb bg, std::uint8_t tol);

    // zero all three channels wherever hit[i] != 0
    void (*mask_apply)(std::uint8_t* r, std::uint8_t* g, std::uint8_t* b,
                       std::uint8_t const* hit, std::size_t n);

    // out[i] = max(a[i], b[i])
    void (*pairwise_max)(std::uint8_t const* a, std::uint8_t const* b,
                         std::uint8_t* out, std::size_t n);

    // out[i] = max(v[i], v[i+1]); v has n+1 elements, out has n
    void (*adjacent_max)(std::uint8_t const* v, std::uint8_t* out,
                         std::size_t n);
};

Table const& scalar();

// Best SIMD table compiled in and supported by this CPU, or null.
Table const* simd_or_null();

// Runtime selection: SIMD when available, scalar otherwise. The
// MORSEGRID_KERNELS environment variable ("scalar", "avx2", "neon")
// overrides, falling back to scalar if the request cannot be honored.
Table const& active();

} // namespace morsegrid::kernels

#endif // MORSEGRID_KERNELS_HPP
