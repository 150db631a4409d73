// Copyright 2026 The Despeckle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "despeckle/codec.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

namespace despeckle {
namespace {

constexpr int kMaxDimension = 1 << 16;

bool IsPgmSpace(std::uint8_t b) {
  return b == ' ' || b == '\t' || b == '\n' || b == '\r' || b == '\v' ||
         b == '\f';
}

// Cursor over a PGM header: whitespace and '#' comments separate fields.
class PgmHeaderReader {
 public:
  explicit PgmHeaderReader(std::span<const std::uint8_t> bytes)
      : bytes_(bytes) {}

  int ReadField(const char* name) {
    SkipSeparators();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw DecodeError(std::string("PGM: missing or malformed ") + name);
    }
    long long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw DecodeError(std::string("PGM: ") + name + " out of range");
      }
      ++pos_;
    }
    return static_cast<int>(value);
  }

  // Consumes the single whitespace byte that terminates the maxval field.
  void ConsumeRasterSeparator() {
    if (pos_ >= bytes_.size() || !IsPgmSpace(bytes_[pos_])) {
      throw DecodeError("PGM: missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t position() const { return pos_; }

 private:
  void SkipSeparators() {
    while (pos_ < bytes_.size()) {
      if (IsPgmSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;  // past the magic
};

void CheckDimension(int value, const char* name) {
  if (value < 1 || value > kMaxDimension) {
    throw DecodeError(std::string("PGM: ") + name + " " +
                      std::to_string(value) + " outside [1, " +
                      std::to_string(kMaxDimension) + "]");
  }
}

// Pixels must be integral and inside [0, 255] before any 8-bit encode.
void RequireEightBit(const GrayImage& image, const char* format) {
  for (int r = 0; r < image.rows(); ++r) {
    for (int c = 0; c < image.cols(); ++c) {
      const double p = image(r, c);
      if (!(p >= 0.0 && p <= 255.0) || std::round(p) != p) {
        throw RangeError(std::string(format) + ": pixel (" +
                         std::to_string(r) + ", " + std::to_string(c) +
                         ") = " + std::to_string(p) +
                         " is not an integer in [0, 255]; quantize first");
      }
    }
  }
}

std::uint32_t LoadU32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         static_cast<std::uint32_t>(b[at + 1]) << 8 |
         static_cast<std::uint32_t>(b[at + 2]) << 16 |
         static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t LoadU16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

void StoreU32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void StoreU16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

constexpr std::size_t kBmpFileHeaderSize = 14;
constexpr std::size_t kBmpInfoHeaderSize = 40;
constexpr std::uint32_t kBiRgb = 0;

std::size_t BmpRowStride(int cols) {
  return (static_cast<std::size_t>(cols) + 3) & ~std::size_t{3};
}

}  // namespace

GrayImage ReadPgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw DecodeError("PGM: bad magic, expected \"P5\"");
  }
  PgmHeaderReader header(bytes);
  const int cols = header.ReadField("width");
  CheckDimension(cols, "width");
  const int rows = header.ReadField("height");
  CheckDimension(rows, "height");
  const int maxval = header.ReadField("maxval");
  if (maxval != 255) {
    throw DecodeError("PGM: unsupported maxval " + std::to_string(maxval) +
                      " (only 255)");
  }
  header.ConsumeRasterSeparator();

  const std::size_t count = static_cast<std::size_t>(rows) * cols;
  const std::size_t start = header.position();
  if (bytes.size() - start < count) {
    throw DecodeError("PGM: payload has " + std::to_string(bytes.size() - start) +
                      " bytes, expected " + std::to_string(count));
  }
  std::vector<double> pixels(bytes.begin() + start,
                             bytes.begin() + start + count);
  return GrayImage(rows, cols, std::move(pixels));
}

Bytes WritePgm(const GrayImage& image) {
  RequireEightBit(image, "PGM");
  const std::string header = "P5\n" + std::to_string(image.cols()) + " " +
                             std::to_string(image.rows()) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.reserve(out.size() + image.size());
  for (double p : image.pixels()) out.push_back(static_cast<std::uint8_t>(p));
  return out;
}

GrayImage ReadBmp8(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kBmpFileHeaderSize + kBmpInfoHeaderSize ||
      bytes[0] != 'B' || bytes[1] != 'M') {
    throw DecodeError("BMP: bad signature or truncated header");
  }
  const std::uint32_t data_offset = LoadU32(bytes, 10);
  const std::uint32_t info_size = LoadU32(bytes, 14);
  if (info_size < kBmpInfoHeaderSize) {
    throw UnsupportedFormatError("BMP: info header of " +
                                 std::to_string(info_size) +
                                 " bytes is not supported");
  }
  const auto width = static_cast<std::int32_t>(LoadU32(bytes, 18));
  const auto height = static_cast<std::int32_t>(LoadU32(bytes, 22));
  const std::uint16_t bit_count = LoadU16(bytes, 28);
  const std::uint32_t compression = LoadU32(bytes, 30);
  std::uint32_t palette_size = LoadU32(bytes, 46);

  if (bit_count != 8) {
    throw UnsupportedFormatError("BMP: " + std::to_string(bit_count) +
                                 "-bit images are not supported (8-bit only)");
  }
  if (compression != kBiRgb) {
    throw UnsupportedFormatError("BMP: compressed bitmaps are not supported");
  }
  if (width < 1 || width > kMaxDimension || height == 0 ||
      height < -kMaxDimension || height > kMaxDimension) {
    throw DecodeError("BMP: bad dimensions");
  }
  if (palette_size == 0) palette_size = 256;
  if (palette_size > 256) throw DecodeError("BMP: palette larger than 256");

  const std::size_t palette_at = kBmpFileHeaderSize + info_size;
  if (bytes.size() < palette_at + 4 * std::size_t{palette_size}) {
    throw DecodeError("BMP: truncated palette");
  }
  std::vector<double> gray(palette_size);
  for (std::uint32_t i = 0; i < palette_size; ++i) {
    const std::size_t at = palette_at + 4 * std::size_t{i};
    const int b = bytes[at], g = bytes[at + 1], r = bytes[at + 2];
    gray[i] = (r == g && g == b)
                  ? r
                  : std::round(0.299 * r + 0.587 * g + 0.114 * b);
  }

  const bool bottom_up = height > 0;
  const int rows = bottom_up ? height : -height;
  const int cols = width;
  const std::size_t stride = BmpRowStride(cols);
  if (data_offset > bytes.size() ||
      bytes.size() - data_offset < stride * rows) {
    throw DecodeError("BMP: truncated pixel data");
  }

  GrayImage image(rows, cols);
  for (int file_row = 0; file_row < rows; ++file_row) {
    const int r = bottom_up ? rows - 1 - file_row : file_row;
    const std::size_t at = data_offset + stride * file_row;
    for (int c = 0; c < cols; ++c) {
      const std::uint8_t index = bytes[at + c];
      if (index >= palette_size) {
        throw DecodeError("BMP: palette index " + std::to_string(index) +
                          " out of range at (" + std::to_string(r) + ", " +
                          std::to_string(c) + ")");
      }
      image(r, c) = gray[index];
    }
  }
  return image;
}

Bytes WriteBmp8(const GrayImage& image) {
  RequireEightBit(image, "BMP");
  const std::size_t stride = BmpRowStride(image.cols());
  const std::size_t data_offset = kBmpFileHeaderSize + kBmpInfoHeaderSize + 256 * 4;
  const std::size_t data_size = stride * image.rows();

  Bytes out;
  out.reserve(data_offset + data_size);
  out.push_back('B');
  out.push_back('M');
  StoreU32(out, static_cast<std::uint32_t>(data_offset + data_size));
  StoreU32(out, 0);  // reserved
  StoreU32(out, static_cast<std::uint32_t>(data_offset));

  StoreU32(out, kBmpInfoHeaderSize);
  StoreU32(out, static_cast<std::uint32_t>(image.cols()));
  StoreU32(out, static_cast<std::uint32_t>(image.rows()));
  StoreU16(out, 1);  // planes
  StoreU16(out, 8);
  StoreU32(out, kBiRgb);
  StoreU32(out, static_cast<std::uint32_t>(data_size));
  StoreU32(out, 2835);  // 72 dpi
  StoreU32(out, 2835);
  StoreU32(out, 256);
  StoreU32(out, 0);

  for (int i = 0; i < 256; ++i) {
    const auto level = static_cast<std::uint8_t>(i);
    out.insert(out.end(), {level, level, level, 0});
  }
  for (int r = image.rows() - 1; r >= 0; --r) {
    for (double p : image.row(r)) out.push_back(static_cast<std::uint8_t>(p));
    out.resize(out.size() + (stride - image.cols()), 0);
  }
  return out;
}

Bytes ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return Bytes(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path.string());
}

namespace {
bool HasBmpExtension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::ranges::transform(ext, ext.begin(),
                         [](unsigned char ch) { return std::tolower(ch); });
  return ext == ".bmp";
}
}  // namespace

GrayImage ReadImageFile(const std::filesystem::path& path) {
  const Bytes bytes = ReadFileBytes(path);
  return HasBmpExtension(path) ? ReadBmp8(bytes) : ReadPgm(bytes);
}

void WriteImageFile(const std::filesystem::path& path, const GrayImage& image) {
  WriteFileBytes(path, HasBmpExtension(path) ? WriteBmp8(image) : WritePgm(image));
}

}  // namespace despeckle
