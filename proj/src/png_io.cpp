// Minimal PNG decoder: 8-bit grayscale or RGB, no interlace, no alpha.
// Chunk CRCs are verified; the IDAT stream is inflated with zlib.

#include <cstring>
#include <string>

#include <zlib.h>

#include "morsegrid/pnm.hpp"

namespace morsegrid {

namespace {

std::uint32_t read_be32(std::uint8_t const* p)
{
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

std::uint8_t paeth(int a, int b, int c)
{
    int const p = a + b - c;
    int const pa = std::abs(p - a);
    int const pb = std::abs(p - b);
    int const pc = std::abs(p - c);
    if (pa <= pb && pa <= pc)
        return static_cast<std::uint8_t>(a);
    if (pb <= pc)
        return static_cast<std::uint8_t>(b);
    return static_cast<std::uint8_t>(c);
}

std::vector<std::uint8_t> inflate_all(std::vector<std::uint8_t> const& in,
                                      std::size_t expected)
{
    std::vector<std::uint8_t> out(expected);
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK)
        throw std::runtime_error("zlib init failed");
    zs.next_in = const_cast<Bytef*>(in.data());
    zs.avail_in = static_cast<uInt>(in.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    int const rc = inflate(&zs, Z_FINISH);
    std::size_t const produced = out.size() - zs.avail_out;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != expected)
        throw TruncatedError("PNG image data (" + std::to_string(produced) +
                             " of " + std::to_string(expected) + " bytes)");
    return out;
}

} // namespace

RgbImage read_png(std::span<std::uint8_t const> bytes)
{
    static std::uint8_t const signature[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    if (bytes.size() < 8 || std::memcmp(bytes.data(), signature, 8) != 0)
        throw ParseError(0, "not a PNG file");

    int width = 0, height = 0, color_type = -1;
    std::vector<std::uint8_t> idat;
    bool seen_ihdr = false, seen_iend = false;

    std::size_t pos = 8;
    while (!seen_iend) {
        if (pos + 8 > bytes.size())
            throw TruncatedError("PNG chunk header");
        std::uint32_t const length = read_be32(&bytes[pos]);
        char type[5] = {};
        std::memcpy(type, &bytes[pos + 4], 4);
        if (pos + 12 + length > bytes.size())
            throw TruncatedError(std::string("PNG chunk ") + type);

        std::uint8_t const* data = &bytes[pos + 8];
        std::uint32_t const stored_crc = read_be32(&bytes[pos + 8 + length]);
        std::uint32_t crc = ::crc32(0, &bytes[pos + 4], 4 + length);
        if (crc != stored_crc)
            throw ParseError(pos + 8 + length,
                             std::string("bad CRC in chunk ") + type);

        if (std::strcmp(type, "IHDR") == 0) {
            if (length != 13)
                throw ParseError(pos, "IHDR length");
            width = static_cast<int>(read_be32(data));
            height = static_cast<int>(read_be32(data + 4));
            int const bit_depth = data[8];
            color_type = data[9];
            int const interlace = data[12];
            if (bit_depth != 8)
                throw UnsupportedDepth("PNG bit depth " +
                                       std::to_string(bit_depth));
            if (color_type != 0 && color_type != 2)
                throw UnsupportedFormat("PNG color type " +
                                        std::to_string(color_type) +
                                        " (need 8-bit gray or RGB)");
            if (interlace != 0)
                throw UnsupportedFormat("interlaced PNG");
            if (width < 1 || height < 1)
                throw ParseError(pos, "PNG dimensions");
            seen_ihdr = true;
        } else if (std::strcmp(type, "IDAT") == 0) {
            if (!seen_ihdr)
                throw ParseError(pos, "IDAT before IHDR");
            idat.insert(idat.end(), data, data + length);
        } else if (std::strcmp(type, "IEND") == 0) {
            seen_iend = true;
        }
        // Ancillary chunks are skipped.
        pos += 12 + length;
    }
    if (!seen_ihdr)
        throw ParseError(pos, "missing IHDR");

    int const bpp = color_type == 2 ? 3 : 1;
    std::size_t const stride = static_cast<std::size_t>(width) * bpp;
    std::vector<std::uint8_t> raw =
        inflate_all(idat, (stride + 1) * static_cast<std::size_t>(height));

    // Undo per-scanline filtering in place.
    std::vector<std::uint8_t> prev(stride, 0);
    std::size_t const n = static_cast<std::size_t>(width) * height;
    std::vector<std::uint8_t> r(n), g(n), b(n);
    for (int y = 0; y < height; ++y) {
        std::uint8_t const filter = raw[(stride + 1) * y];
        std::uint8_t* row = &raw[(stride + 1) * y + 1];
        for (std::size_t i = 0; i < stride; ++i) {
            int const a = i >= static_cast<std::size_t>(bpp) ? row[i - bpp] : 0;
            int const up = prev[i];
            int const c =
                i >= static_cast<std::size_t>(bpp) ? prev[i - bpp] : 0;
            switch (filter) {
            case 0: break;
            case 1: row[i] = static_cast<std::uint8_t>(row[i] + a); break;
            case 2: row[i] = static_cast<std::uint8_t>(row[i] + up); break;
            case 3:
                row[i] = static_cast<std::uint8_t>(row[i] + ((a + up) >> 1));
                break;
            case 4:
                row[i] = static_cast<std::uint8_t>(row[i] + paeth(a, up, c));
                break;
            default:
                throw ParseError((stride + 1) * y, "PNG filter type " +
                                                       std::to_string(filter));
            }
        }
        std::memcpy(prev.data(), row, stride);

        std::size_t const base = static_cast<std::size_t>(y) * width;
        if (bpp == 3) {
            for (int x = 0; x < width; ++x) {
                r[base + x] = row[3 * x];
                g[base + x] = row[3 * x + 1];
                b[base + x] = row[3 * x + 2];
            }
        } else {
            for (int x = 0; x < width; ++x)
                r[base + x] = g[base + x] = b[base + x] = row[x];
        }
    }

    return RgbImage(width, height, std::move(r), std::move(g), std::move(b));
}

} // namespace morsegrid
