#pragma once

// Color fringe patterns: one vertical stripe per code, written as binary
// portable pixmap (P6).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ahdb/core.hpp"

namespace ahdb {

inline constexpr std::uint32_t kDefaultFringeWidth = 4;
inline constexpr std::uint32_t kDefaultFringeHeight = 64;

/// The seven non-black binary RGB colors in the order (0,0,1), (0,1,0),
/// (0,1,1), (1,0,0), (1,0,1), (1,1,0), (1,1,1); a set bit becomes 255.
Alphabet standard_rgb_alphabet();

/// First k colors of the standard alphabet, k <= 7.
Alphabet standard_rgb_alphabet(std::uint32_t k);

struct FringeSpec {
  std::uint32_t fringe_width = kDefaultFringeWidth;
  std::uint32_t height = kDefaultFringeHeight;
  Alphabet alphabet = standard_rgb_alphabet();
};

struct Image {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

  Rgb pixel(std::uint32_t x, std::uint32_t y) const {
    const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
  }
};

/// Stripe i covers columns [i*w, (i+1)*w) on every row. Throws
/// CodeOutOfRange for a code without a color and InvalidParameters for a
/// zero width or height or a non-RGB alphabet.
Image render(std::span<const Code> codes, const FringeSpec& spec);

/// "P6\n<width> <height>\n255\n" followed by the pixel bytes.
void write_ppm(const Image& image, std::ostream& out);
std::string to_ppm(const Image& image);

/// Parses a P6 image with max value 255 (comments in the header are
/// accepted). Throws ParseError.
Image read_ppm(std::istream& in);

/// Inverse of render: samples the middle row at the center of every
/// stripe and maps the color back to its code. Throws ParseError if the
/// width is not a multiple of `fringe_width` or a color is unknown.
std::vector<Code> sample_fringes(const Image& image, std::uint32_t fringe_width,
                                 const Alphabet& alphabet);

}  // namespace ahdb
