/**
 * @file pgm_io.cpp
 * @brief P2/P5 graymap decoding and canonical P5 encoding.
 */
#include "ringshift/pgm_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace ringshift {

namespace {

constexpr int kMaxDimension = 1 << 20;
constexpr std::size_t kMaxPixelCount = std::size_t{1} << 28;
constexpr int kMaxMaxval = 65535;

bool is_pgm_space(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' || ch == '\f';
}

bool is_digit(char ch) {
    return ch >= '0' && ch <= '9';
}

struct Cursor {
    std::string_view bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    char peek() const { return bytes[pos]; }
};

// Whitespace and '#' comments (running to end of line) separate header tokens.
void skip_separators(Cursor& cur) {
    while (!cur.eof()) {
        const char ch = cur.peek();
        if (is_pgm_space(ch)) {
            ++cur.pos;
        } else if (ch == '#') {
            while (!cur.eof() && cur.peek() != '\n') {
                ++cur.pos;
            }
        } else {
            break;
        }
    }
}

long long parse_unsigned(Cursor& cur, const char* what, long long max_value) {
    skip_separators(cur);
    if (cur.eof()) {
        throw ParseError(std::string("unexpected end of data while reading ") + what, cur.pos);
    }
    if (!is_digit(cur.peek())) {
        throw ParseError(std::string("expected digit for ") + what + ", got '" + cur.peek() + "'",
                         cur.pos);
    }
    const std::size_t start = cur.pos;
    long long value = 0;
    while (!cur.eof() && is_digit(cur.peek())) {
        value = value * 10 + (cur.peek() - '0');
        if (value > max_value) {
            throw ParseError(std::string(what) + " exceeds limit " + std::to_string(max_value),
                             start);
        }
        ++cur.pos;
    }
    return value;
}

}  // namespace

GrayImage parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw ParseError("not a P2/P5 portable graymap", 0);
    }
    const bool binary = bytes[1] == '5';
    Cursor cur{bytes, 2};

    const int width = static_cast<int>(parse_unsigned(cur, "width", kMaxDimension));
    const int height = static_cast<int>(parse_unsigned(cur, "height", kMaxDimension));
    const int maxval = static_cast<int>(parse_unsigned(cur, "maxval", kMaxMaxval));
    if (width < 1 || height < 1) {
        throw ParseError("image dimensions must be positive", cur.pos);
    }
    if (maxval < 1) {
        throw ParseError("maxval must be >= 1", cur.pos);
    }

    const std::size_t count = static_cast<std::size_t>(width) * height;
    if (count > kMaxPixelCount) {
        throw ParseError("declared raster of " + std::to_string(count) + " pixels is too large",
                         cur.pos);
    }
    std::vector<int> pixels;

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (cur.eof() || !is_pgm_space(cur.peek())) {
            throw ParseError("expected single whitespace between maxval and raster", cur.pos);
        }
        ++cur.pos;
        const int bytes_per_sample = maxval <= 255 ? 1 : 2;
        const std::size_t need = count * bytes_per_sample;
        if (bytes.size() - cur.pos < need) {
            throw TruncatedError("raster truncated: need " + std::to_string(need) +
                                 " bytes, have " + std::to_string(bytes.size() - cur.pos));
        }
        pixels.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            int v;
            if (bytes_per_sample == 1) {
                v = static_cast<std::uint8_t>(bytes[cur.pos++]);
            } else {
                const int hi = static_cast<std::uint8_t>(bytes[cur.pos++]);
                const int lo = static_cast<std::uint8_t>(bytes[cur.pos++]);
                v = (hi << 8) | lo;
            }
            if (v > maxval) {
                throw PixelRangeError("sample " + std::to_string(i) + " has value " +
                                      std::to_string(v) + " > maxval " + std::to_string(maxval));
            }
            pixels[i] = v;
        }
    } else {
        pixels.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            skip_separators(cur);
            if (cur.eof()) {
                throw TruncatedError("raster truncated: got " + std::to_string(i) + " of " +
                                     std::to_string(count) + " samples");
            }
            const long long v = parse_unsigned(cur, "sample", kMaxMaxval);
            if (v > maxval) {
                throw PixelRangeError("sample " + std::to_string(i) + " has value " +
                                      std::to_string(v) + " > maxval " + std::to_string(maxval));
            }
            pixels[i] = static_cast<int>(v);
        }
    }

    return {width, height, std::move(pixels), maxval + 1};
}

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failure on '" + path.string() + "'");
    }
    return parse_pgm(buffer.str());
}

std::string serialize_pgm(const GrayImage& image) {
    const int maxval = image.modulus() - 1;
    std::string out = "P5\n" + std::to_string(image.width()) + " " +
                      std::to_string(image.height()) + "\n" + std::to_string(maxval) + "\n";
    out.reserve(out.size() + image.pixels().size() * (maxval <= 255 ? 1 : 2));
    if (maxval <= 255) {
        for (int v : image.pixels()) {
            out.push_back(static_cast<char>(static_cast<std::uint8_t>(v)));
        }
    } else {
        for (int v : image.pixels()) {
            out.push_back(static_cast<char>(static_cast<std::uint8_t>(v >> 8)));
            out.push_back(static_cast<char>(static_cast<std::uint8_t>(v & 0xff)));
        }
    }
    return out;
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    const std::string bytes = serialize_pgm(image);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write failure on '" + path.string() + "'");
    }
}

}  // namespace ringshift
