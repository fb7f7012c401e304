#include "bincollatz/raster.hpp"

#include <cctype>
#include <string>

#include "bincollatz/errors.hpp"

namespace bincollatz {

std::string RasterImage::row_bits(std::size_t row) const {
  std::string bits;
  bits.reserve(width);
  for (std::size_t c = 0; c < width; ++c) bits.push_back(at(row, c) ? '1' : '0');
  const auto last = bits.find_last_of('1');
  bits.resize(last == std::string::npos ? 0 : last + 1);
  return bits;
}

RasterImage build_raster(const TrajectoryRecord& record) {
  RasterImage image;
  image.width = record.max_length;
  image.height = record.values.size();
  image.pixels.assign(image.width * image.height, 0);
  for (std::size_t r = 0; r < image.height; ++r) {
    const auto bits = record.fraction(r).to_bits();
    for (std::size_t c = 0; c < bits.size(); ++c) image.pixels[r * image.width + c] = bits[c] == '1';
  }
  return image;
}

void write_pbm(const RasterImage& image, std::ostream& out) {
  out << "P1\n" << image.width << ' ' << image.height << '\n';
  std::string line;
  for (std::size_t r = 0; r < image.height; ++r) {
    line.clear();
    for (std::size_t c = 0; c < image.width; ++c) {
      if (c != 0) line.push_back(' ');
      line.push_back(image.at(r, c) ? '1' : '0');
    }
    line.push_back('\n');
    out << line;
  }
}

namespace {

// Next whitespace-delimited token, skipping '#' comments to end of line.
bool next_token(std::istream& in, std::string& token) {
  token.clear();
  char c;
  while (in.get(c)) {
    if (c == '#') {
      while (in.get(c) && c != '\n') {}
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) return true;
      continue;
    }
    token.push_back(c);
  }
  return !token.empty();
}

std::size_t parse_size(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw MalformedInput("PBM: bad dimension '" + token + "'");
  }
  return std::stoull(token);
}

}  // namespace

RasterImage read_pbm(std::istream& in) {
  std::string token;
  if (!next_token(in, token) || token != "P1") throw MalformedInput("PBM: missing P1 magic");
  RasterImage image;
  if (!next_token(in, token)) throw MalformedInput("PBM: missing width");
  image.width = parse_size(token);
  if (!next_token(in, token)) throw MalformedInput("PBM: missing height");
  image.height = parse_size(token);
  image.pixels.reserve(image.width * image.height);
  // Plain PBM permits digits without separators, so read character-wise.
  char c;
  while (image.pixels.size() < image.width * image.height && in.get(c)) {
    if (c == '#') {
      while (in.get(c) && c != '\n') {}
    } else if (c == '0' || c == '1') {
      image.pixels.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw MalformedInput(std::string("PBM: unexpected character '") + c + "'");
    }
  }
  if (image.pixels.size() != image.width * image.height) throw MalformedInput("PBM: truncated pixel data");
  return image;
}

}  // namespace bincollatz
