#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sarcx {

// Row-major 2-D grid.
template <class T>
struct Grid {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(std::size_t w, std::size_t h, T fill = T{}) : width(w), height(h), data(w * h, fill) {}

  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }
  T& at(std::size_t x, std::size_t y) { return data[y * width + x]; }
  const T& at(std::size_t x, std::size_t y) const { return data[y * width + x]; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

using FloatMap = Grid<double>;
using Mask = Grid<std::uint8_t>;

// Intensity image: every value is finite and >= 0 unless it equals the
// nodata sentinel (a NaN sentinel matches every NaN).
class Raster {
 public:
  // Throws Error(InvalidArgument) on a size mismatch or invalid value.
  Raster(std::size_t width, std::size_t height, std::vector<double> values,
         std::optional<double> nodata = std::nullopt);

  std::size_t width() const { return grid_.width; }
  std::size_t height() const { return grid_.height; }
  const std::vector<double>& values() const { return grid_.data; }
  const FloatMap& grid() const { return grid_; }
  double at(std::size_t x, std::size_t y) const { return grid_.at(x, y); }
  const std::optional<double>& nodata() const { return nodata_; }

  bool is_nodata(double v) const {
    if (!nodata_) return false;
    return std::isnan(*nodata_) ? std::isnan(v) : v == *nodata_;
  }

 private:
  FloatMap grid_;
  std::optional<double> nodata_;
};

}  // namespace sarcx
