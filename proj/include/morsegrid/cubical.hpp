// cubical.hpp
//
// Filtered cubical complex of a 2D grayscale image. Cells live on the
// doubled-coordinate grid: a cell at (a, b) with 0 <= a <= 2(W-1),
// 0 <= b <= 2(H-1) has dimension (a odd) + (b odd). Even/even cells are
// the pixels; odd coordinates interpolate edges and squares between them.
// A cell's filtration value is the maximum grayscale value over its
// vertices, so the sublevel sets sweep the image from dark to light.

#ifndef MORSEGRID_CUBICAL_HPP
#define MORSEGRID_CUBICAL_HPP

#include <cstdint>
#include <vector>

#include "morsegrid/image.hpp"

namespace morsegrid {

struct Cell {
    std::int32_t a = 0;
    std::int32_t b = 0;

    int dimension() const { return (a & 1) + (b & 1); }

    friend bool operator==(Cell const&, Cell const&) = default;
};

// Fixed-capacity result for faces/cofaces queries (at most 4 of either).
struct CellList {
    Cell items[4];
    int count = 0;

    void push(Cell c) { items[count++] = c; }
    Cell const* begin() const { return items; }
    Cell const* end() const { return items + count; }
    Cell const& operator[](int i) const { return items[i]; }
    int size() const { return count; }
};

class CubicalComplex {
public:
    explicit CubicalComplex(GrayImage const& img);

    int width() const { return width_; }    // pixels
    int height() const { return height_; }
    int grid_width() const { return ga_; }  // doubled-grid extents
    int grid_height() const { return gb_; }
    std::size_t cell_count() const { return value_.size(); }

    bool contains(Cell c) const
    {
        return c.a >= 0 && c.b >= 0 && c.a < ga_ && c.b < gb_;
    }

    std::uint32_t id(Cell c) const
    {
        return static_cast<std::uint32_t>(c.b) * ga_ + c.a;
    }

    Cell cell(std::uint32_t id) const
    {
        return Cell{static_cast<std::int32_t>(id % ga_),
                    static_cast<std::int32_t>(id / ga_)};
    }

    std::uint8_t value(Cell c) const { return value_[id(c)]; }
    std::uint8_t value_at(std::uint32_t id) const { return value_[id]; }

    // Codimension-1 faces: 4 edges of a square, 2 vertices of an edge,
    // nothing for a vertex.
    CellList faces(Cell c) const;

    // Codimension-1 cofaces, clipped to the grid.
    CellList cofaces(Cell c) const;

    std::size_t count_cells(int dim) const;

    // #vertices - #edges + #squares; 1 for every full grid.
    long euler_characteristic() const;

private:
    int width_, height_;
    int ga_, gb_;
    std::vector<std::uint8_t> value_;
};

inline CubicalComplex build_complex(GrayImage const& img)
{
    return CubicalComplex(img);
}

} // namespace morsegrid

#endif // MORSEGRID_CUBICAL_HPP
