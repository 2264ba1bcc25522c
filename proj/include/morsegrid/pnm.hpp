// pnm.hpp
//
// Netpbm readers and writers (PGM P2/P5, PPM P3/P6). Round-trips are
// bit-exact for all valid 8-bit images; smaller maxvals are rescaled to
// the 0..255 range on load.

#ifndef MORSEGRID_PNM_HPP
#define MORSEGRID_PNM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "morsegrid/image.hpp"

namespace morsegrid {

enum class PnmMode { Ascii, Binary };

GrayImage read_pgm(std::span<std::uint8_t const> bytes);
std::vector<std::uint8_t> write_pgm(GrayImage const& img, PnmMode mode);

RgbImage read_ppm(std::span<std::uint8_t const> bytes);
std::vector<std::uint8_t> write_ppm(RgbImage const& img, PnmMode mode);

enum class RgbFormat { Ppm, Png };

// Dispatches on the declared format; PNG decoding lives in png_io.cpp.
RgbImage read_rgb(std::span<std::uint8_t const> bytes, RgbFormat format);

// PNG reader (8-bit RGB or grayscale, no interlace, no alpha). Grayscale
// content is expanded to equal r/g/b channels.
RgbImage read_png(std::span<std::uint8_t const> bytes);

} // namespace morsegrid

#endif // MORSEGRID_PNM_HPP
