#include "morsegrid/pnm.hpp"

#include <string>

namespace morsegrid {

namespace {

// Cursor over the raw bytes of a netpbm header. Keeps the absolute offset
// for error reporting.
class Scanner {
public:
    explicit Scanner(std::span<std::uint8_t const> bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    bool eof() const { return pos_ >= bytes_.size(); }

    // Whitespace runs and '#' comments (to end of line) are interchangeable
    // separators in ASCII headers.
    void skip_separators()
    {
        while (!eof()) {
            std::uint8_t const c = bytes_[pos_];
            if (c == '#') {
                while (!eof() && bytes_[pos_] != '\n')
                    ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' ||
                       c == '\v' || c == '\f') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    int read_uint(char const* what, long max)
    {
        skip_separators();
        if (eof())
            throw TruncatedError(std::string("expected ") + what);
        if (bytes_[pos_] < '0' || bytes_[pos_] > '9')
            throw ParseError(pos_, std::string("expected ") + what);
        long value = 0;
        while (!eof() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > max)
                throw ParseError(pos_, std::string(what) + " out of range");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    std::string read_magic()
    {
        if (bytes_.size() < 2)
            throw TruncatedError("magic number");
        std::string magic(reinterpret_cast<char const*>(bytes_.data()), 2);
        pos_ = 2;
        return magic;
    }

    // Binary payloads start after exactly one whitespace byte following the
    // maxval token.
    std::span<std::uint8_t const> binary_payload()
    {
        if (eof())
            throw TruncatedError("binary payload");
        std::uint8_t const c = bytes_[pos_];
        if (!(c == ' ' || c == '\t' || c == '\r' || c == '\n'))
            throw ParseError(pos_, "expected single whitespace before payload");
        ++pos_;
        return bytes_.subspan(pos_);
    }

private:
    std::span<std::uint8_t const> bytes_;
    std::size_t pos_ = 0;
};

// round(v * 255 / maxval) with half rounding up; identity for maxval 255.
inline std::uint8_t rescale(int v, int maxval)
{
    if (maxval == 255)
        return static_cast<std::uint8_t>(v);
    return static_cast<std::uint8_t>((2 * v * 255 + maxval) / (2 * maxval));
}

struct Header {
    int width, height, maxval;
};

Header read_header(Scanner& sc)
{
    Header h;
    h.width = sc.read_uint("width", 1 << 20);
    h.height = sc.read_uint("height", 1 << 20);
    if (h.width < 1 || h.height < 1)
        throw ParseError(sc.offset(), "dimensions must be positive");
    h.maxval = sc.read_uint("maxval", 1 << 16);
    if (h.maxval < 1)
        throw ParseError(sc.offset(), "maxval must be positive");
    if (h.maxval > 255)
        throw UnsupportedDepth("maxval " + std::to_string(h.maxval) +
                               " > 255");
    return h;
}

std::vector<std::uint8_t> read_ascii_samples(Scanner& sc, std::size_t count,
                                             int maxval)
{
    std::vector<std::uint8_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        sc.skip_separators();
        if (sc.eof())
            throw TruncatedError("pixel data ends after " +
                                 std::to_string(i) + " of " +
                                 std::to_string(count) + " samples");
        int const v = sc.read_uint("sample", 255);
        if (v > maxval)
            throw ParseError(sc.offset(), "sample exceeds maxval");
        out.push_back(rescale(v, maxval));
    }
    return out;
}

std::vector<std::uint8_t> read_binary_samples(Scanner& sc, std::size_t count,
                                              int maxval)
{
    auto const payload = sc.binary_payload();
    if (payload.size() < count)
        throw TruncatedError("binary payload has " +
                             std::to_string(payload.size()) + " of " +
                             std::to_string(count) + " bytes");
    std::vector<std::uint8_t> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (payload[i] > maxval)
            throw ParseError(sc.offset() + i, "sample exceeds maxval");
        out[i] = rescale(payload[i], maxval);
    }
    return out;
}

void append(std::vector<std::uint8_t>& out, std::string const& s)
{
    out.insert(out.end(), s.begin(), s.end());
}

} // namespace

GrayImage read_pgm(std::span<std::uint8_t const> bytes)
{
    Scanner sc(bytes);
    std::string const magic = sc.read_magic();
    if (magic != "P2" && magic != "P5")
        throw ParseError(0, "not a PGM file (magic '" + magic + "')");

    Header const h = read_header(sc);
    std::size_t const count =
        static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);

    std::vector<std::uint8_t> values =
        magic == "P2" ? read_ascii_samples(sc, count, h.maxval)
                      : read_binary_samples(sc, count, h.maxval);
    return GrayImage(h.width, h.height, std::move(values));
}

std::vector<std::uint8_t> write_pgm(GrayImage const& img, PnmMode mode)
{
    std::vector<std::uint8_t> out;
    out.reserve(img.size() * (mode == PnmMode::Ascii ? 4 : 1) + 32);
    append(out, std::string(mode == PnmMode::Ascii ? "P2" : "P5") + "\n" +
                    std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n255\n");
    if (mode == PnmMode::Binary) {
        out.insert(out.end(), img.values().begin(), img.values().end());
    } else {
        for (int y = 0; y < img.height(); ++y) {
            std::string line;
            for (int x = 0; x < img.width(); ++x) {
                if (x > 0)
                    line += ' ';
                line += std::to_string(img.at(x, y));
            }
            line += '\n';
            append(out, line);
        }
    }
    return out;
}

RgbImage read_ppm(std::span<std::uint8_t const> bytes)
{
    Scanner sc(bytes);
    std::string const magic = sc.read_magic();
    if (magic != "P3" && magic != "P6")
        throw ParseError(0, "not a PPM file (magic '" + magic + "')");

    Header const h = read_header(sc);
    std::size_t const count = 3 * static_cast<std::size_t>(h.width) *
                              static_cast<std::size_t>(h.height);

    std::vector<std::uint8_t> const samples =
        magic == "P3" ? read_ascii_samples(sc, count, h.maxval)
                      : read_binary_samples(sc, count, h.maxval);

    std::size_t const n = count / 3;
    std::vector<std::uint8_t> r(n), g(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = samples[3 * i];
        g[i] = samples[3 * i + 1];
        b[i] = samples[3 * i + 2];
    }
    return RgbImage(h.width, h.height, std::move(r), std::move(g),
                    std::move(b));
}

std::vector<std::uint8_t> write_ppm(RgbImage const& img, PnmMode mode)
{
    std::vector<std::uint8_t> out;
    out.reserve(img.size() * (mode == PnmMode::Ascii ? 12 : 3) + 32);
    append(out, std::string(mode == PnmMode::Ascii ? "P3" : "P6") + "\n" +
                    std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n255\n");
    if (mode == PnmMode::Binary) {
        for (std::size_t i = 0; i < img.size(); ++i) {
            out.push_back(img.red()[i]);
            out.push_back(img.green()[i]);
            out.push_back(img.blue()[i]);
        }
    } else {
        for (int y = 0; y < img.height(); ++y) {
            std::string line;
            for (int x = 0; x < img.width(); ++x) {
                Rgb const p = img.at(x, y);
                if (x > 0)
                    line += ' ';
                line += std::to_string(p.r) + " " + std::to_string(p.g) +
                        " " + std::to_string(p.b);
            }
            line += '\n';
            append(out, line);
        }
    }
    return out;
}

RgbImage read_rgb(std::span<std::uint8_t const> bytes, RgbFormat format)
{
    switch (format) {
    case RgbFormat::Ppm:
        return read_ppm(bytes);
    case RgbFormat::Png:
        return read_png(bytes);
    }
    throw UnsupportedFormat("unknown format tag");
}

} // namespace morsegrid
