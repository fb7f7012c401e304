#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "bincollatz/analysis.hpp"

namespace bincollatz {

/// One row per iterate, top to bottom; column j is fractional bit j+1,
/// left-aligned at the binary point and padded with zeros on the right.
struct RasterImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, 1 == bit set

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
  /// Bitstring of a row with the zero padding removed.
  std::string row_bits(std::size_t row) const;

  friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

RasterImage build_raster(const TrajectoryRecord& record);

/// Plain PBM: "P1", then "<width> <height>", then one line per row of
/// space-separated digits. LF line endings.
void write_pbm(const RasterImage& image, std::ostream& out);

/// Reads the plain PBM form written by write_pbm (comments allowed).
/// Throws MalformedInput on anything else.
RasterImage read_pbm(std::istream& in);

}  // namespace bincollatz
