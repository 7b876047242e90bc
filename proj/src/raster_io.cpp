#include "sarcx/raster_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <memory>
#include <string>

#include "json.hpp"

#include "sarcx/error.hpp"

namespace sarcx {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian hosts are not supported");

[[noreturn]] void io_error(const fs::path& path, const std::string& what) {
  throw Error(ErrorCode::Io, path.string() + ": " + what);
}

[[noreturn]] void format_error(const fs::path& path, const std::string& what) {
  throw Error(ErrorCode::Format, path.string() + ": " + what);
}

fs::path sidecar_of(const fs::path& path) {
  fs::path s = path;
  s += ".json";
  return s;
}

std::vector<char> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_error(path, "cannot open for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& path, const void* data, std::size_t n) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) io_error(path, "cannot open for writing");
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  if (!out) io_error(path, "write failed");
}

template <class T>
T load_le(const char* p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    v = std::bit_cast<T>(bytes);
  }
  return v;
}

template <class T>
void store_le(T v, char* p) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    v = std::bit_cast<T>(bytes);
  }
  std::memcpy(p, &v, sizeof(T));
}

const char* dtype_of(RasterFormat f) {
  return f == RasterFormat::FlatF32 ? "float32" : "float64";
}

std::size_t dtype_size(RasterFormat f) { return f == RasterFormat::FlatF32 ? 4 : 8; }

Raster read_flat(const fs::path& path, RasterFormat format) {
  const fs::path side = sidecar_of(path);
  std::ifstream sin(side);
  if (!sin) io_error(side, "missing sidecar");
  json meta;
  try {
    sin >> meta;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, side.string() + ": " + e.what());
  }
  std::size_t width = 0;
  std::size_t height = 0;
  std::string dtype;
  std::string byte_order;
  std::optional<double> nodata;
  try {
    width = meta.at("width").get<std::size_t>();
    height = meta.at("height").get<std::size_t>();
    dtype = meta.at("dtype").get<std::string>();
    byte_order = meta.value("byte_order", std::string("little"));
    if (meta.contains("nodata") && !meta["nodata"].is_null()) {
      const auto& nd = meta["nodata"];
      if (nd.is_string()) {
        std::string s = nd.get<std::string>();
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (s != "nan") format_error(side, "nodata string must be \"nan\"");
        nodata = std::numeric_limits<double>::quiet_NaN();
      } else {
        nodata = nd.get<double>();
      }
    }
  } catch (const json::exception& e) {
    format_error(side, std::string("bad sidecar: ") + e.what());
  }
  if (byte_order != "little") format_error(side, "only little-endian data is supported");
  if (dtype != dtype_of(format)) {
    format_error(side, "sidecar dtype '" + dtype + "' does not match format " +
                           to_string(format));
  }

  const std::vector<char> bytes = read_bytes(path);
  const std::size_t elem = dtype_size(format);
  if (bytes.size() != width * height * elem) {
    format_error(path, "size mismatch: file has " + std::to_string(bytes.size()) +
                           " bytes, sidecar implies " + std::to_string(width * height * elem));
  }
  std::vector<double> values(width * height);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const char* p = bytes.data() + i * elem;
    values[i] = format == RasterFormat::FlatF32 ? static_cast<double>(load_le<float>(p))
                                                : load_le<double>(p);
  }
  try {
    return Raster(width, height, std::move(values), nodata);
  } catch (const Error& e) {
    format_error(path, e.what());
  }
}

void write_sidecar(const fs::path& path, std::size_t width, std::size_t height,
                   RasterFormat format, const std::optional<double>& nodata) {
  json meta = {{"width", width},
               {"height", height},
               {"dtype", dtype_of(format)},
               {"byte_order", "little"}};
  if (nodata) {
    if (std::isnan(*nodata)) meta["nodata"] = "nan";
    else meta["nodata"] = *nodata;
  }
  const std::string text = meta.dump(2) + "\n";
  write_bytes(sidecar_of(path), text.data(), text.size());
}

void write_flat(const std::vector<double>& values, std::size_t width, std::size_t height,
                const fs::path& path, RasterFormat format,
                const std::optional<double>& nodata) {
  const std::size_t elem = dtype_size(format);
  std::vector<char> bytes(values.size() * elem);
  for (std::size_t i = 0; i < values.size(); ++i) {
    char* p = bytes.data() + i * elem;
    if (format == RasterFormat::FlatF32) store_le(static_cast<float>(values[i]), p);
    else store_le(values[i], p);
  }
  write_bytes(path, bytes.data(), bytes.size());
  write_sidecar(path, width, height, format, nodata);
}

// Parses the whitespace/comment separated P5 header fields.
class PnmHeader {
 public:
  explicit PnmHeader(const std::vector<char>& bytes) : bytes_(bytes) {}

  std::size_t next_number(const fs::path& path) {
    skip_space();
    if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      format_error(path, "malformed PGM header");
    }
    std::size_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (v > (std::size_t{1} << 32)) format_error(path, "PGM header value too large");
      ++pos_;
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t data_offset() const { return pos_ + 1; }

 private:
  void skip_space() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<char>& bytes_;
  std::size_t pos_ = 2;
};

Raster read_pgm(const fs::path& path) {
  const std::vector<char> bytes = read_bytes(path);
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    format_error(path, "not a binary PGM (P5) file");
  }
  PnmHeader header(bytes);
  const std::size_t width = header.next_number(path);
  const std::size_t height = header.next_number(path);
  const std::size_t maxval = header.next_number(path);
  if (width == 0 || height == 0) format_error(path, "PGM dimensions must be positive");
  if (maxval == 0 || maxval > 65535) format_error(path, "PGM maxval out of range");
  const std::size_t sample = maxval < 256 ? 1 : 2;
  const std::size_t offset = header.data_offset();
  if (offset > bytes.size() || bytes.size() - offset < width * height * sample) {
    format_error(path, "PGM raster truncated");
  }
  std::vector<double> values(width * height);
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + offset);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = sample == 1 ? p[i] : static_cast<double>((p[2 * i] << 8) | p[2 * i + 1]);
  }
  return Raster(width, height, std::move(values));
}

}  // namespace

RasterFormat parse_raster_format(std::string_view name) {
  if (name == "flat-f32") return RasterFormat::FlatF32;
  if (name == "flat-f64") return RasterFormat::FlatF64;
  if (name == "pgm16" || name == "pgm") return RasterFormat::Pgm;
  throw Error(ErrorCode::InvalidArgument, "unknown raster format '" + std::string(name) +
                                              "' (expected flat-f32, flat-f64 or pgm16)");
}

const char* to_string(RasterFormat f) {
  switch (f) {
    case RasterFormat::FlatF32: return "flat-f32";
    case RasterFormat::FlatF64: return "flat-f64";
    case RasterFormat::Pgm: return "pgm16";
  }
  return "unknown";
}

Raster read_raster(const fs::path& path, RasterFormat format) {
  if (format == RasterFormat::Pgm) return read_pgm(path);
  return read_flat(path, format);
}

void write_raster(const Raster& raster, const fs::path& path, RasterFormat format) {
  if (format == RasterFormat::Pgm) {
    double top = 1.0;
    for (double v : raster.values()) top = std::max(top, v);
    if (top > 65535.0) format_error(path, "values exceed the 16-bit PGM range");
    write_pgm(raster.grid(), path, static_cast<std::uint16_t>(std::ceil(top)));
    return;
  }
  write_flat(raster.values(), raster.width(), raster.height(), path, format, raster.nodata());
}

void write_float_map(const FloatMap& map, const fs::path& path) {
  write_flat(map.data, map.width, map.height, path, RasterFormat::FlatF64,
             std::numeric_limits<double>::quiet_NaN());
}

void write_pgm(const FloatMap& map, const fs::path& path, std::uint16_t maxval) {
  if (maxval == 0) format_error(path, "PGM maxval must be >= 1");
  const std::size_t sample = maxval < 256 ? 1 : 2;
  std::string out = "P5\n" + std::to_string(map.width) + " " + std::to_string(map.height) +
                    "\n" + std::to_string(maxval) + "\n";
  const std::size_t header = out.size();
  out.resize(header + map.size() * sample);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const double v = map.data[i];
    if (!(v >= 0.0 && v <= maxval) || v != std::floor(v)) {
      format_error(path, "PGM samples must be integers in [0, maxval]");
    }
    const auto s = static_cast<std::uint16_t>(v);
    if (sample == 1) {
      out[header + i] = static_cast<char>(s);
    } else {
      out[header + 2 * i] = static_cast<char>(s >> 8);
      out[header + 2 * i + 1] = static_cast<char>(s & 0xff);
    }
  }
  write_bytes(path, out.data(), out.size());
}

void write_mask(const Mask& mask, const fs::path& path) {
  FloatMap m(mask.width, mask.height);
  for (std::size_t i = 0; i < mask.size(); ++i) m.data[i] = mask.data[i] ? 1.0 : 0.0;
  write_pgm(m, path, 1);
}

std::vector<std::uint8_t> stretch_to_gray(const FloatMap& map, double lo_q, double hi_q) {
  std::vector<double> finite;
  finite.reserve(map.size());
  for (double v : map.data) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  std::vector<std::uint8_t> gray(map.size(), 0);
  if (finite.empty()) return gray;
  std::sort(finite.begin(), finite.end());
  // Linear interpolation between order statistics.
  auto quantile = [&finite](double q) {
    const double h = q * static_cast<double>(finite.size() - 1);
    const auto i = static_cast<std::size_t>(std::floor(h));
    const std::size_t j = std::min(i + 1, finite.size() - 1);
    return finite[i] + (h - static_cast<double>(i)) * (finite[j] - finite[i]);
  };
  const double lo = quantile(lo_q);
  const double hi = quantile(hi_q);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const double v = map.data[i];
    if (!std::isfinite(v)) continue;
    if (!(hi > lo)) {
      gray[i] = 128;
      continue;
    }
    const double s = std::round((v - lo) / (hi - lo) * 255.0);
    gray[i] = static_cast<std::uint8_t>(std::clamp(s, 0.0, 255.0));
  }
  return gray;
}

void write_png_view(const FloatMap& map, const fs::path& path) {
  if (map.empty()) format_error(path, "cannot render an empty map");
  const std::vector<std::uint8_t> gray = stretch_to_gray(map);

  std::unique_ptr<std::FILE, int (*)(std::FILE*)> file(std::fopen(path.c_str(), "wb"),
                                                        &std::fclose);
  if (!file) io_error(path, "cannot open for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) io_error(path, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    io_error(path, "png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    io_error(path, "libpng write error");
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(map.width),
               static_cast<png_uint_32>(map.height), 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t y = 0; y < map.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(gray.data() + y * map.width));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace sarcx
