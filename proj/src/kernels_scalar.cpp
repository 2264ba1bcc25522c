// Scalar reference kernels. These define the semantics; the SIMD variants
// must match them byte for byte.

#include <algorithm>
#include <cstdlib>

#include "morsegrid/kernels.hpp"

namespace morsegrid::kernels {

namespace {

// round-half-up(s/3) for s = r+g+b; 3 is odd, so fold the half into the
// numerator: floor(s/3 + 1/2) = (2s + 3) / 6.
void gray_average_scalar(std::uint8_t const* r, std::uint8_t const* g,
                         std::uint8_t const* b, std::uint8_t* out,
                         std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        unsigned const s = unsigned(r[i]) + g[i] + b[i];
        out[i] = static_cast<std::uint8_t>((2 * s + 3) / 6);
    }
}

void gray_luminosity_scalar(std::uint8_t const* r, std::uint8_t const* g,
                            std::uint8_t const* b, std::uint8_t* out,
                            std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        unsigned const s = 21u * r[i] + 72u * g[i] + 7u * b[i];
        out[i] = static_cast<std::uint8_t>((s + 50) / 100);
    }
}

void mask_accumulate_scalar(std::uint8_t const* r, std::uint8_t const* g,
                            std::uint8_t const* b, std::uint8_t* hit,
                            std::size_t n, Rgb bg, std::uint8_t tol)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(int(r[i]) - bg.r) <= tol &&
            std::abs(int(g[i]) - bg.g) <= tol &&
            std::abs(int(b[i]) - bg.b) <= tol)
            hit[i] = 0xFF;
    }
}

void mask_apply_scalar(std::uint8_t* r, std::uint8_t* g, std::uint8_t* b,
                       std::uint8_t const* hit, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (hit[i]) {
            r[i] = 0;
            g[i] = 0;
            b[i] = 0;
        }
    }
}

void pairwise_max_scalar(std::uint8_t const* a, std::uint8_t const* b,
                         std::uint8_t* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::max(a[i], b[i]);
}

void adjacent_max_scalar(std::uint8_t const* v, std::uint8_t* out,
                         std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::max(v[i], v[i + 1]);
}

} // namespace

Table const& scalar()
{
    static Table const table{
        "scalar",
        gray_average_scalar,
        gray_luminosity_scalar,
        mask_accumulate_scalar,
        mask_apply_scalar,
        pairwise_max_scalar,
        adjacent_max_scalar,
    };
    return table;
}

} // namespace morsegrid::kernels
