#include "morsegrid/cubical.hpp"

#include <string>

#include "morsegrid/kernels.hpp"

namespace morsegrid {

CubicalComplex::CubicalComplex(GrayImage const& img)
    : width_(img.width()),
      height_(img.height()),
      ga_(2 * img.width() - 1),
      gb_(2 * img.height() - 1),
      value_(static_cast<std::size_t>(ga_) * gb_)
{
    auto const& k = kernels::active();
    int const w = width_;
    std::uint8_t const* pix = img.data();

    // Per pixel row: horizontal-edge maxima; per row pair: vertical-edge
    // maxima and, from those, square maxima.
    std::vector<std::uint8_t> hmax(w > 1 ? w - 1 : 0);
    std::vector<std::uint8_t> vmax(w);
    std::vector<std::uint8_t> smax(w > 1 ? w - 1 : 0);

    for (int y = 0; y < height_; ++y) {
        std::uint8_t const* row = pix + static_cast<std::size_t>(y) * w;
        std::uint8_t* even = &value_[static_cast<std::size_t>(2 * y) * ga_];
        if (w > 1)
            k.adjacent_max(row, hmax.data(), w - 1);
        for (int x = 0; x < w; ++x)
            even[2 * x] = row[x];
        for (int x = 0; x + 1 < w; ++x)
            even[2 * x + 1] = hmax[x];

        if (y + 1 < height_) {
            std::uint8_t const* next = row + w;
            std::uint8_t* odd =
                &value_[static_cast<std::size_t>(2 * y + 1) * ga_];
            k.pairwise_max(row, next, vmax.data(), w);
            if (w > 1)
                k.adjacent_max(vmax.data(), smax.data(), w - 1);
            for (int x = 0; x < w; ++x)
                odd[2 * x] = vmax[x];
            for (int x = 0; x + 1 < w; ++x)
                odd[2 * x + 1] = smax[x];
        }
    }
}

CellList CubicalComplex::faces(Cell c) const
{
    if (!contains(c))
        throw BoundsError("cell (" + std::to_string(c.a) + "," +
                          std::to_string(c.b) + ")");
    CellList out;
    bool const odd_a = c.a & 1;
    bool const odd_b = c.b & 1;
    if (odd_a && odd_b) {
        out.push({c.a - 1, c.b});
        out.push({c.a + 1, c.b});
        out.push({c.a, c.b - 1});
        out.push({c.a, c.b + 1});
    } else if (odd_a) {
        out.push({c.a - 1, c.b});
        out.push({c.a + 1, c.b});
    } else if (odd_b) {
        out.push({c.a, c.b - 1});
        out.push({c.a, c.b + 1});
    }
    return out;
}

CellList CubicalComplex::cofaces(Cell c) const
{
    if (!contains(c))
        throw BoundsError("cell (" + std::to_string(c.a) + "," +
                          std::to_string(c.b) + ")");
    CellList out;
    bool const odd_a = c.a & 1;
    bool const odd_b = c.b & 1;
    auto push_if = [&](std::int32_t a, std::int32_t b) {
        if (a >= 0 && b >= 0 && a < ga_ && b < gb_)
            out.push({a, b});
    };
    if (!odd_a && !odd_b) {
        push_if(c.a - 1, c.b);
        push_if(c.a + 1, c.b);
        push_if(c.a, c.b - 1);
        push_if(c.a, c.b + 1);
    } else if (odd_a && !odd_b) {
        push_if(c.a, c.b - 1);
        push_if(c.a, c.b + 1);
    } else if (!odd_a && odd_b) {
        push_if(c.a - 1, c.b);
        push_if(c.a + 1, c.b);
    }
    return out;
}

std::size_t CubicalComplex::count_cells(int dim) const
{
    std::size_t const w = width_, h = height_;
    switch (dim) {
    case 0: return w * h;
    case 1: return w * (h - 1) + h * (w - 1);
    case 2: return (w - 1) * (h - 1);
    default: return 0;
    }
}

long CubicalComplex::euler_characteristic() const
{
    return static_cast<long>(count_cells(0)) -
           static_cast<long>(count_cells(1)) +
           static_cast<long>(count_cells(2));
}

} // namespace morsegrid
