#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace fspi {

/// Real-valued 2-D map stored row-major: value(x, y) lives at index y * width + x.
///
/// Used for scenes and watermarks (reflectance, nominally in [0, 1]) as well as
/// for reconstructions, which carry an arbitrary linear gain and may be negative.
class Image {
 public:
  Image() = default;
  Image(std::size_t width, std::size_t height, double fill = 0.0);
  Image(std::size_t width, std::size_t height, std::vector<double> values);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double& operator()(std::size_t x, std::size_t y) { return values_[y * width_ + x]; }
  double operator()(std::size_t x, std::size_t y) const { return values_[y * width_ + x]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> values_;
};

/// Three equally sized channels in R, G, B order.
struct ColorImage {
  std::array<Image, 3> channels;

  std::size_t width() const noexcept { return channels[0].width(); }
  std::size_t height() const noexcept { return channels[0].height(); }
  /// Throws DimensionMismatch unless all channels share one shape.
  void validate() const;
  static ColorImage from_gray(const Image& gray);
};

/// Throws InvalidArgument unless the image is non-empty with finite, nonnegative values.
void validate_scene(const Image& img, const char* what = "scene");

void require_same_shape(const Image& a, const Image& b, const char* context);

/// Neumaier-compensated sum of all pixel values.
double pixel_sum(const Image& img);

/// Linear rescale to [0, 1]; a constant image maps to all zeros.
Image normalize_min_max(const Image& img);

/// alpha * a + beta * b.
Image linear_combination(double alpha, const Image& a, double beta, const Image& b);

Image scaled(const Image& img, double factor);

/// Pixel-wise img + offset.
Image offset(const Image& img, double delta);

}  // namespace fspi
