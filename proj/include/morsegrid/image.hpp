// image.hpp
//
// Raster image types shared by the whole pipeline. RGB data is stored as
// three separate channel planes so the data-parallel kernels can run on
// contiguous per-channel buffers.

#ifndef MORSEGRID_IMAGE_HPP
#define MORSEGRID_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace morsegrid {

// ---------------------------------------------------------------------------
// Errors

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t offset, std::string const& reason)
        : std::runtime_error("parse error at byte " + std::to_string(offset) +
                             ": " + reason),
          offset(offset)
    {
    }
};

struct TruncatedError : std::runtime_error {
    explicit TruncatedError(std::string const& what)
        : std::runtime_error("truncated input: " + what)
    {
    }
};

struct UnsupportedDepth : std::runtime_error {
    explicit UnsupportedDepth(std::string const& what)
        : std::runtime_error("unsupported depth: " + what)
    {
    }
};

struct UnsupportedFormat : std::runtime_error {
    explicit UnsupportedFormat(std::string const& what)
        : std::runtime_error("unsupported format: " + what)
    {
    }
};

struct CropError : std::runtime_error {
    explicit CropError(std::string const& what)
        : std::runtime_error("crop: " + what)
    {
    }
};

struct IncompleteSurjection : std::runtime_error {
    explicit IncompleteSurjection(std::string const& what)
        : std::runtime_error("incomplete surjection table: " + what)
    {
    }
};

struct BoundsError : std::runtime_error {
    explicit BoundsError(std::string const& what)
        : std::runtime_error("out of bounds: " + what)
    {
    }
};

struct OracleTooLarge : std::runtime_error {
    explicit OracleTooLarge(std::string const& what)
        : std::runtime_error("oracle size bound exceeded: " + what)
    {
    }
};

struct AcyclicityViolation : std::logic_error {
    explicit AcyclicityViolation(std::string const& what)
        : std::logic_error("gradient field cycle: " + what)
    {
    }
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(std::string const& what)
        : std::runtime_error("insufficient data: " + what)
    {
    }
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(std::string const& what)
        : std::runtime_error("shape mismatch: " + what)
    {
    }
};

struct DegreeTooHigh : std::runtime_error {
    explicit DegreeTooHigh(std::string const& what)
        : std::runtime_error("fit degree too high: " + what)
    {
    }
};

// ---------------------------------------------------------------------------
// Images
//
// Row-major, origin at the top-left pixel, y increasing downward. Channel
// values are 8-bit; images with a smaller maxval are rescaled on load.

class GrayImage {
public:
    GrayImage() = default;

    GrayImage(int width, int height, std::vector<std::uint8_t> values)
        : width_(width), height_(height), values_(std::move(values))
    {
        if (width_ < 1 || height_ < 1)
            throw std::invalid_argument("GrayImage: dimensions must be positive");
        if (values_.size() != static_cast<std::size_t>(width_) * height_)
            throw std::invalid_argument("GrayImage: pixel count != width * height");
    }

    static GrayImage filled(int width, int height, std::uint8_t value)
    {
        return GrayImage(width, height,
                         std::vector<std::uint8_t>(
                             static_cast<std::size_t>(width) * height, value));
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return values_.size(); }

    std::uint8_t at(int x, int y) const
    {
        return values_[static_cast<std::size_t>(y) * width_ + x];
    }

    std::vector<std::uint8_t> const& values() const { return values_; }
    std::uint8_t const* data() const { return values_.data(); }

    friend bool operator==(GrayImage const& a, GrayImage const& b)
    {
        return a.width_ == b.width_ && a.height_ == b.height_ &&
               a.values_ == b.values_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> values_;
};

struct Rgb {
    std::uint8_t r, g, b;
    friend bool operator==(Rgb const&, Rgb const&) = default;
};

class RgbImage {
public:
    RgbImage() = default;

    RgbImage(int width, int height, std::vector<std::uint8_t> r,
             std::vector<std::uint8_t> g, std::vector<std::uint8_t> b)
        : width_(width),
          height_(height),
          r_(std::move(r)),
          g_(std::move(g)),
          b_(std::move(b))
    {
        if (width_ < 1 || height_ < 1)
            throw std::invalid_argument("RgbImage: dimensions must be positive");
        std::size_t const n = static_cast<std::size_t>(width_) * height_;
        if (r_.size() != n || g_.size() != n || b_.size() != n)
            throw std::invalid_argument("RgbImage: plane size != width * height");
    }

    static RgbImage filled(int width, int height, Rgb value)
    {
        std::size_t const n = static_cast<std::size_t>(width) * height;
        return RgbImage(width, height,
                        std::vector<std::uint8_t>(n, value.r),
                        std::vector<std::uint8_t>(n, value.g),
                        std::vector<std::uint8_t>(n, value.b));
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return r_.size(); }

    Rgb at(int x, int y) const
    {
        std::size_t const i = static_cast<std::size_t>(y) * width_ + x;
        return Rgb{r_[i], g_[i], b_[i]};
    }

    std::vector<std::uint8_t> const& red() const { return r_; }
    std::vector<std::uint8_t> const& green() const { return g_; }
    std::vector<std::uint8_t> const& blue() const { return b_; }

    friend bool operator==(RgbImage const& a, RgbImage const& b)
    {
        return a.width_ == b.width_ && a.height_ == b.height_ &&
               a.r_ == b.r_ && a.g_ == b.g_ && a.b_ == b.b_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> r_, g_, b_;
};

} // namespace morsegrid

#endif // MORSEGRID_IMAGE_HPP
