#include "fspi/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fspi/error.hpp"
#include "kahan.hpp"

namespace fspi {

Image::Image(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), values_(width * height, fill) {}

Image::Image(std::size_t width, std::size_t height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (values_.size() != width * height) {
    throw DimensionMismatch("image buffer holds " + std::to_string(values_.size()) +
                            " values, expected " + std::to_string(width * height));
  }
}

void ColorImage::validate() const {
  for (const auto& c : channels) {
    if (!c.same_shape(channels[0])) {
      throw DimensionMismatch("color channels differ in size");
    }
  }
}

ColorImage ColorImage::from_gray(const Image& gray) { return ColorImage{{gray, gray, gray}}; }

void validate_scene(const Image& img, const char* what) {
  if (img.empty() || img.width() == 0 || img.height() == 0) {
    throw InvalidArgument(std::string(what) + " is empty");
  }
  for (double v : img.values()) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidArgument(std::string(what) + " has a negative or non-finite value");
    }
  }
}

void require_same_shape(const Image& a, const Image& b, const char* context) {
  if (!a.same_shape(b)) {
    throw DimensionMismatch(std::string(context) + ": " + std::to_string(a.width()) + "x" +
                            std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                            "x" + std::to_string(b.height()));
  }
}

double pixel_sum(const Image& img) {
  detail::NeumaierSum acc;
  for (double v : img.values()) acc.add(v);
  return acc.value();
}

Image normalize_min_max(const Image& img) {
  Image out(img.width(), img.height());
  if (img.empty()) return out;
  const auto [lo, hi] = std::minmax_element(img.values().begin(), img.values().end());
  const double range = *hi - *lo;
  if (range <= 0.0) return out;
  auto src = img.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = (src[i] - *lo) / range;
  return out;
}

Image linear_combination(double alpha, const Image& a, double beta, const Image& b) {
  require_same_shape(a, b, "linear_combination");
  Image out(a.width(), a.height());
  auto pa = a.values();
  auto pb = b.values();
  auto po = out.values();
  for (std::size_t i = 0; i < po.size(); ++i) po[i] = alpha * pa[i] + beta * pb[i];
  return out;
}

Image scaled(const Image& img, double factor) {
  Image out = img;
  for (double& v : out.values()) v *= factor;
  return out;
}

Image offset(const Image& img, double delta) {
  Image out = img;
  for (double& v : out.values()) v += delta;
  return out;
}

}  // namespace fspi
