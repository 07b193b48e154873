#include "ahdb/pattern.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ahdb/error.hpp"

namespace ahdb {

Alphabet standard_rgb_alphabet() { return standard_rgb_alphabet(7); }

Alphabet standard_rgb_alphabet(std::uint32_t k) {
  if (k == 0 || k > 7) {
    throw Error(ErrorKind::SizeLimit, "the binary RGB alphabet has 7 colors (asked for " +
                                          std::to_string(k) + ")");
  }
  std::vector<Label> labels;
  for (std::uint32_t bits = 1; bits <= k; ++bits) {
    const auto level = [bits](std::uint32_t bit) -> std::uint8_t {
      return (bits >> bit) & 1U ? 255 : 0;
    };
    labels.emplace_back(Rgb{level(2), level(1), level(0)});
  }
  return Alphabet(std::move(labels));
}

Image render(std::span<const Code> codes, const FringeSpec& spec) {
  if (spec.fringe_width == 0 || spec.height == 0) {
    throw Error(ErrorKind::InvalidParameters, "fringe width and height must be positive");
  }
  if (!spec.alphabet.is_rgb()) {
    throw Error(ErrorKind::InvalidParameters, "fringe patterns need an RGB alphabet");
  }
  const std::uint64_t width = static_cast<std::uint64_t>(codes.size()) * spec.fringe_width;
  if (width > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::SizeLimit, "image too wide");
  }
  Image image;
  image.width = static_cast<std::uint32_t>(width);
  image.height = spec.height;

  std::vector<std::uint8_t> row;
  row.reserve(width * 3);
  for (Code c : codes) {
    if (c >= spec.alphabet.size()) {
      throw Error(ErrorKind::CodeOutOfRange,
                  "code " + std::to_string(c) + " has no color in the alphabet");
    }
    const Rgb color = std::get<Rgb>(spec.alphabet.label(c));
    for (std::uint32_t x = 0; x < spec.fringe_width; ++x) {
      row.insert(row.end(), {color.r, color.g, color.b});
    }
  }
  image.rgb.reserve(row.size() * spec.height);
  for (std::uint32_t y = 0; y < spec.height; ++y) {
    image.rgb.insert(image.rgb.end(), row.begin(), row.end());
  }
  return image;
}

void write_ppm(const Image& image, std::ostream& out) {
  out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.rgb.data()),
            static_cast<std::streamsize>(image.rgb.size()));
}

std::string to_ppm(const Image& image) {
  std::ostringstream out(std::ios::binary);
  write_ppm(image, out);
  return out.str();
}

namespace {

// Next header token, skipping whitespace and '#' comments.
std::string header_token(std::istream& in) {
  std::string token;
  while (true) {
    const int c = in.peek();
    if (c == EOF) break;
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (std::isspace(c)) {
      if (!token.empty()) break;
      in.get();
    } else {
      token.push_back(static_cast<char>(in.get()));
    }
  }
  return token;
}

std::uint32_t header_number(std::istream& in, const char* what) {
  const std::string token = header_token(in);
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(token, &used);
    if (used == token.size() && value <= std::numeric_limits<std::uint32_t>::max()) {
      return static_cast<std::uint32_t>(value);
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, std::string("bad PPM ") + what + " '" + token + "'");
}

}  // namespace

Image read_ppm(std::istream& in) {
  if (header_token(in) != "P6") throw Error(ErrorKind::ParseError, "not a P6 pixmap");
  Image image;
  image.width = header_number(in, "width");
  image.height = header_number(in, "height");
  if (header_number(in, "max value") != 255) {
    throw Error(ErrorKind::ParseError, "only max value 255 is supported");
  }
  in.get();  // single whitespace byte before the raster
  image.rgb.resize(static_cast<std::size_t>(image.width) * image.height * 3);
  in.read(reinterpret_cast<char*>(image.rgb.data()),
          static_cast<std::streamsize>(image.rgb.size()));
  if (static_cast<std::size_t>(in.gcount()) != image.rgb.size()) {
    throw Error(ErrorKind::ParseError, "truncated pixel data");
  }
  return image;
}

std::vector<Code> sample_fringes(const Image& image, std::uint32_t fringe_width,
                                 const Alphabet& alphabet) {
  if (fringe_width == 0 || image.width % fringe_width != 0 || image.height == 0) {
    throw Error(ErrorKind::ParseError, "image width is not a whole number of fringes");
  }
  std::vector<Code> codes;
  const std::uint32_t y = image.height / 2;
  for (std::uint32_t x = fringe_width / 2; x < image.width; x += fringe_width) {
    const auto code = alphabet.code_of(image.pixel(x, y));
    if (!code) throw Error(ErrorKind::ParseError, "unknown color at column " + std::to_string(x));
    codes.push_back(*code);
  }
  return codes;
}

}  // namespace ahdb
