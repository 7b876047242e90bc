#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sarcx/models.hpp"
#include "sarcx/raster.hpp"

namespace sarcx {

struct Rect {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t width = 0;
  std::size_t height = 0;

  bool overlaps(const Rect& o) const {
    return x < o.x + o.width && o.x < x + width && y < o.y + o.height && o.y < y + height;
  }
};

struct PhantomRegion {
  Rect rect;
  SpeckleModel model;
};

// Canvas of independent speckled pixels. Region k is filled row-major with
// draws seeded by seed + k; pixels outside every region come from Γ(L, L)
// (unit mean) seeded by seed + regions.size().
struct PhantomSpec {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<PhantomRegion> regions;
  double looks = 3.0;
  std::uint64_t seed = 0;

  // Throws Error(InvalidSpec) on empty canvas, out-of-canvas or overlapping
  // rectangles, or models whose looks differ from the spec's.
  void validate() const;
};

struct Phantom {
  Raster image;
  // 0 for background, k + 1 for region k.
  Grid<std::uint16_t> labels;
};

Phantom generate_phantom(const PhantomSpec& spec);

// {"width":W, "height":H, "looks":L, "seed":S,
//  "regions":[{"rect":{"x":..,"y":..,"width":..,"height":..},
//              "model":{"type":"gamma","mean":c} | {"type":"g0","alpha":a,"gamma":g}}]}
// Throws Error(Parse) for malformed JSON and Error(InvalidSpec) for a
// well-formed document describing an invalid scene.
PhantomSpec parse_phantom_spec(std::string_view json_text);

}  // namespace sarcx
