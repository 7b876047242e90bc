#include "sarcx/phantom.hpp"

#include <string>

#include "json.hpp"
#include "sarcx/error.hpp"
#include "sarcx/sampling.hpp"

namespace sarcx {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidSpec, "invalid phantom spec: " + what);
}

double model_looks(const SpeckleModel& m) {
  return std::visit([](const auto& p) { return p.looks(); }, m);
}

}  // namespace

void PhantomSpec::validate() const {
  if (width == 0 || height == 0) invalid("canvas dimensions must be positive");
  if (!(looks >= 1.0)) invalid("looks must be >= 1");
  if (regions.size() >= 65535) invalid("too many regions");
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const Rect& r = regions[i].rect;
    if (r.width == 0 || r.height == 0) invalid("region " + std::to_string(i) + " is empty");
    if (r.x + r.width > width || r.y + r.height > height) {
      invalid("region " + std::to_string(i) + " extends past the canvas");
    }
    if (model_looks(regions[i].model) != looks) {
      invalid("region " + std::to_string(i) + " uses a different number of looks");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (r.overlaps(regions[j].rect)) {
        invalid("regions " + std::to_string(j) + " and " + std::to_string(i) + " overlap");
      }
    }
  }
}

Phantom generate_phantom(const PhantomSpec& spec) {
  spec.validate();
  std::vector<double> values(spec.width * spec.height, 0.0);
  Grid<std::uint16_t> labels(spec.width, spec.height, 0);

  for (std::size_t k = 0; k < spec.regions.size(); ++k) {
    const auto& [rect, model] = spec.regions[k];
    const std::vector<double> draws = sample(model, rect.width * rect.height, spec.seed + k);
    std::size_t i = 0;
    for (std::size_t y = rect.y; y < rect.y + rect.height; ++y) {
      for (std::size_t x = rect.x; x < rect.x + rect.width; ++x) {
        values[y * spec.width + x] = draws[i++];
        labels.at(x, y) = static_cast<std::uint16_t>(k + 1);
      }
    }
  }

  std::size_t uncovered = 0;
  for (std::uint16_t l : labels.data) uncovered += (l == 0);
  if (uncovered > 0) {
    const std::vector<double> draws = sample_gamma(
        GammaParams(1.0, spec.looks), uncovered, spec.seed + spec.regions.size());
    std::size_t i = 0;
    for (std::size_t p = 0; p < values.size(); ++p) {
      if (labels.data[p] == 0) values[p] = draws[i++];
    }
  }
  return {Raster(spec.width, spec.height, std::move(values)), std::move(labels)};
}

PhantomSpec parse_phantom_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed phantom JSON: ") + e.what());
  }
  PhantomSpec spec;
  try {
    spec.width = doc.at("width").get<std::size_t>();
    spec.height = doc.at("height").get<std::size_t>();
    spec.looks = doc.value("looks", 3.0);
    spec.seed = doc.value("seed", std::uint64_t{0});
    for (const auto& r : doc.value("regions", json::array())) {
      const auto& rect = r.at("rect");
      const Rect box{rect.at("x").get<std::size_t>(), rect.at("y").get<std::size_t>(),
                     rect.at("width").get<std::size_t>(), rect.at("height").get<std::size_t>()};
      const auto& m = r.at("model");
      const std::string type = m.at("type").get<std::string>();
      if (type == "gamma") {
        spec.regions.push_back({box, GammaParams(m.at("mean").get<double>(), spec.looks)});
      } else if (type == "g0") {
        spec.regions.push_back(
            {box, G0Params(m.at("alpha").get<double>(), m.at("gamma").get<double>(), spec.looks)});
      } else {
        invalid("unknown model type '" + type + "'");
      }
    }
  } catch (const json::exception& e) {
    invalid(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidSpec) throw;
    invalid(e.what());
  }
  spec.validate();
  return spec;
}

}  // namespace sarcx
