#include "sarcx/raster.hpp"

#include <string>

#include "sarcx/error.hpp"

namespace sarcx {

Raster::Raster(std::size_t width, std::size_t height, std::vector<double> values,
               std::optional<double> nodata)
    : nodata_(nodata) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::InvalidArgument, "raster dimensions must be positive");
  }
  if (values.size() != width * height) {
    throw Error(ErrorCode::InvalidArgument,
                "raster holds " + std::to_string(values.size()) + " values, expected " +
                    std::to_string(width * height));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (is_nodata(v)) continue;
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "raster value at index " + std::to_string(i) +
                      " is negative or non-finite");
    }
  }
  grid_.width = width;
  grid_.height = height;
  grid_.data = std::move(values);
}

}  // namespace sarcx
