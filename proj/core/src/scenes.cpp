#include "fspi/scenes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "fspi/error.hpp"
#include "fspi/fft.hpp"
#include "fspi/frequency.hpp"
#include "fspi/rng.hpp"

namespace fspi {

namespace {

void check_size(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw InvalidArgument("scene size must be at least 1x1");
}

double uniform(CounterRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.next_uniform(); }

double smoothstep(double edge0, double edge1, double x) {
  const double t = std::clamp((x - edge0) / (edge1 - edge0), 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

// 5x7 glyphs, one byte per row, bit 4 is the leftmost column.
struct Glyph {
  char c;
  std::array<std::uint8_t, 7> rows;
};

constexpr std::array<Glyph, 36> kFont = {{
    {'A', {0x0E, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}}, {'B', {0x1E, 0x11, 0x11, 0x1E, 0x11, 0x11, 0x1E}},
    {'C', {0x0E, 0x11, 0x10, 0x10, 0x10, 0x11, 0x0E}}, {'D', {0x1E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x1E}},
    {'E', {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x1F}}, {'F', {0x1F, 0x10, 0x10, 0x1E, 0x10, 0x10, 0x10}},
    {'G', {0x0E, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0F}}, {'H', {0x11, 0x11, 0x11, 0x1F, 0x11, 0x11, 0x11}},
    {'I', {0x0E, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0E}}, {'J', {0x07, 0x02, 0x02, 0x02, 0x02, 0x12, 0x0C}},
    {'K', {0x11, 0x12, 0x14, 0x18, 0x14, 0x12, 0x11}}, {'L', {0x10, 0x10, 0x10, 0x10, 0x10, 0x10, 0x1F}},
    {'M', {0x11, 0x1B, 0x15, 0x15, 0x11, 0x11, 0x11}}, {'N', {0x11, 0x11, 0x19, 0x15, 0x13, 0x11, 0x11}},
    {'O', {0x0E, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E}}, {'P', {0x1E, 0x11, 0x11, 0x1E, 0x10, 0x10, 0x10}},
    {'Q', {0x0E, 0x11, 0x11, 0x11, 0x15, 0x12, 0x0D}}, {'R', {0x1E, 0x11, 0x11, 0x1E, 0x14, 0x12, 0x11}},
    {'S', {0x0F, 0x10, 0x10, 0x0E, 0x01, 0x01, 0x1E}}, {'T', {0x1F, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04}},
    {'U', {0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0E}}, {'V', {0x11, 0x11, 0x11, 0x11, 0x11, 0x0A, 0x04}},
    {'W', {0x11, 0x11, 0x11, 0x15, 0x15, 0x15, 0x0A}}, {'X', {0x11, 0x11, 0x0A, 0x04, 0x0A, 0x11, 0x11}},
    {'Y', {0x11, 0x11, 0x11, 0x0A, 0x04, 0x04, 0x04}}, {'Z', {0x1F, 0x01, 0x02, 0x04, 0x08, 0x10, 0x1F}},
    {'0', {0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E}}, {'1', {0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E}},
    {'2', {0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F}}, {'3', {0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E}},
    {'4', {0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02}}, {'5', {0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E}},
    {'6', {0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E}}, {'7', {0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08}},
    {'8', {0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E}}, {'9', {0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C}},
}};

const std::array<std::uint8_t, 7>* glyph(char c) {
  if (c == ' ') return nullptr;
  const char upper = (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
  for (const auto& g : kFont) {
    if (g.c == upper) return &g.rows;
  }
  throw InvalidArgument(std::string("text_logo has no glyph for '") + c + "'");
}

struct Ellipse {
  double cx, cy, rx, ry, angle;
  std::array<double, 3> color;
};

std::vector<Ellipse> pepper_layout(std::size_t width, std::size_t height, std::uint64_t seed) {
  CounterRng rng(seed, 0x5045505045ULL);
  static constexpr std::array<std::array<double, 3>, 4> kPalette = {{
      {0.85, 0.12, 0.10},  // red
      {0.20, 0.65, 0.15},  // green
      {0.90, 0.75, 0.15},  // yellow
      {0.55, 0.10, 0.12},  // dark red
  }};
  const double s = static_cast<double>(std::min(width, height));
  std::vector<Ellipse> out;
  for (int i = 0; i < 7; ++i) {
    Ellipse e;
    e.cx = uniform(rng, 0.1, 0.9) * static_cast<double>(width);
    e.cy = uniform(rng, 0.1, 0.9) * static_cast<double>(height);
    e.rx = uniform(rng, 0.12, 0.3) * s;
    e.ry = uniform(rng, 0.1, 0.25) * s;
    e.angle = uniform(rng, 0.0, std::numbers::pi);
    e.color = kPalette[static_cast<std::size_t>(i) % kPalette.size()];
    out.push_back(e);
  }
  return out;
}

ColorImage render_peppers(std::size_t width, std::size_t height, std::uint64_t seed) {
  check_size(width, height);
  const auto layout = pepper_layout(width, height, seed);
  const Image grain = texture_1f(width, height, seed + 17);
  ColorImage out;
  for (auto& c : out.channels) c = Image(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double fx = static_cast<double>(x) / static_cast<double>(width);
      const double fy = static_cast<double>(y) / static_cast<double>(height);
      const double back = 0.18 + 0.12 * fx + 0.05 * fy;
      std::array<double, 3> px = {back, back * 0.9, back * 0.8};
      for (const auto& e : layout) {
        const double dx = static_cast<double>(x) - e.cx;
        const double dy = static_cast<double>(y) - e.cy;
        const double ca = std::cos(e.angle);
        const double sa = std::sin(e.angle);
        const double px_ = (ca * dx + sa * dy) / e.rx;
        const double py_ = (-sa * dx + ca * dy) / e.ry;
        const double r = std::sqrt(px_ * px_ + py_ * py_);
        const double edge = 1.5 / std::min(e.rx, e.ry);
        const double cover = 1.0 - smoothstep(1.0 - edge, 1.0 + edge, r);
        if (cover <= 0.0) continue;
        // Lit from the upper left.
        const double shade = 0.55 + 0.45 * std::sqrt(std::max(0.0, 1.0 - r * r)) - 0.15 * (px_ + py_) / 2.0;
        for (std::size_t c = 0; c < 3; ++c) {
          px[c] = (1.0 - cover) * px[c] + cover * std::clamp(e.color[c] * shade + 0.08, 0.0, 1.0);
        }
      }
      const double g = 0.06 * (grain(x, y) - 0.5);
      for (std::size_t c = 0; c < 3; ++c) out.channels[c](x, y) = std::clamp(px[c] + g, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace

Image blob_phantom(std::size_t width, std::size_t height, std::uint64_t seed) {
  check_size(width, height);
  CounterRng rng(seed, 0x424C4F42ULL);
  const double s = static_cast<double>(std::min(width, height));
  struct Blob {
    double cx, cy, sigma, amp;
  };
  std::vector<Blob> blobs;
  for (int i = 0; i < 8; ++i) {
    blobs.push_back({uniform(rng, 0.15, 0.85) * static_cast<double>(width),
                     uniform(rng, 0.15, 0.85) * static_cast<double>(height), uniform(rng, 0.05, 0.18) * s,
                     uniform(rng, 0.3, 1.0)});
  }
  Image out(width, height);
  double peak = 0.0;
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      double v = 0.05;
      for (const auto& b : blobs) {
        const double dx = static_cast<double>(x) - b.cx;
        const double dy = static_cast<double>(y) - b.cy;
        v += b.amp * std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
      }
      out(x, y) = v;
      peak = std::max(peak, v);
    }
  }
  return scaled(out, 1.0 / peak);
}

Image resolution_chart(std::size_t width, std::size_t height) {
  check_size(width, height);
  Image out(width, height, 0.1);
  const std::size_t hw = std::max<std::size_t>(1, width / 2);
  const std::size_t hh = std::max<std::size_t>(1, height / 2);
  const std::array<std::size_t, 3> periods = {8, 4, 2};
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      double v = 0.1;
      if (x < hw && y < hh) {
        const std::size_t band = std::min<std::size_t>(2, y * 3 / hh);
        const std::size_t p = periods[band];
        v = (x % p) < p / 2 ? 0.9 : 0.1;
      } else if (x >= hw && y < hh) {
        const std::size_t band = std::min<std::size_t>(2, (x - hw) * 3 / std::max<std::size_t>(1, width - hw));
        const std::size_t p = periods[band];
        v = (y % p) < p / 2 ? 0.9 : 0.1;
      } else if (x < hw) {
        const double dx = static_cast<double>(x) - static_cast<double>(hw) / 2.0;
        const double dy = static_cast<double>(y - hh) - static_cast<double>(height - hh) / 2.0;
        const double r = std::hypot(dx, dy);
        const double rmax = 0.45 * static_cast<double>(std::min(hw, height - hh));
        if (r <= rmax) v = std::cos(12.0 * std::atan2(dy, dx)) >= 0.0 ? 0.9 : 0.1;
      } else {
        const double dx = static_cast<double>(x - hw) - static_cast<double>(width - hw) / 2.0;
        const double dy = static_cast<double>(y - hh) - static_cast<double>(height - hh) / 2.0;
        const double r = std::hypot(dx, dy);
        const double rmax = 0.45 * static_cast<double>(std::min(width - hw, height - hh));
        if (r <= rmax && r >= 0.5 * rmax) v = 0.9;
        if (r < 0.2 * rmax) v = 0.6;
      }
      out(x, y) = v;
    }
  }
  return out;
}

Image text_logo(std::size_t width, std::size_t height, std::string_view text) {
  check_size(width, height);
  if (text.empty()) throw InvalidArgument("text_logo needs at least one character");
  const std::size_t cols = 6 * text.size() - 1;
  const std::size_t scale = std::max<std::size_t>(
      1, std::min(width * 9 / (10 * cols), height * 9 / (10 * 7)));
  const std::size_t tw = cols * scale;
  const std::size_t th = 7 * scale;
  const std::size_t x0 = width > tw ? (width - tw) / 2 : 0;
  const std::size_t y0 = height > th ? (height - th) / 2 : 0;
  Image out(width, height, 0.0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto* rows = glyph(text[i]);
    if (!rows) continue;
    for (std::size_t gy = 0; gy < 7; ++gy) {
      for (std::size_t gx = 0; gx < 5; ++gx) {
        if (!(((*rows)[gy] >> (4 - gx)) & 1U)) continue;
        for (std::size_t sy = 0; sy < scale; ++sy) {
          for (std::size_t sx = 0; sx < scale; ++sx) {
            const std::size_t x = x0 + (6 * i + gx) * scale + sx;
            const std::size_t y = y0 + gy * scale + sy;
            if (x < width && y < height) out(x, y) = 1.0;
          }
        }
      }
    }
  }
  return out;
}

Image texture_1f(std::size_t width, std::size_t height, std::uint64_t seed) {
  check_size(width, height);
  std::vector<std::complex<double>> spec(width * height);
  for (std::size_t v = 0; v < height; ++v) {
    for (std::size_t u = 0; u < width; ++u) {
      const double fu = static_cast<double>(wrapped_index(u, width)) / static_cast<double>(width);
      const double fv = static_cast<double>(wrapped_index(v, height)) / static_cast<double>(height);
      const double f = std::hypot(fu, fv);
      CounterRng rng(seed, v * width + u);
      const double phase = 2.0 * std::numbers::pi * rng.next_uniform();
      const double amp = f == 0.0 ? 0.0 : 1.0 / f;
      spec[v * width + u] = std::polar(amp, phase);
    }
  }
  const auto field = fft2_inverse(spec, width, height);
  Image out(width, height);
  auto px = out.values();
  for (std::size_t i = 0; i < field.size(); ++i) px[i] = field[i].real();
  return normalize_min_max(out);
}

Image peppers_like(std::size_t width, std::size_t height, std::uint64_t seed) {
  const ColorImage c = render_peppers(width, height, seed);
  Image out(width, height);
  auto px = out.values();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = 0.299 * c.channels[0].values()[i] + 0.587 * c.channels[1].values()[i] + 0.114 * c.channels[2].values()[i];
  }
  return out;
}

ColorImage peppers_like_color(std::size_t width, std::size_t height, std::uint64_t seed) {
  return render_peppers(width, height, seed);
}

std::vector<std::string> scene_names() { return {"blobs", "chart", "logo", "logo:<TEXT>", "texture", "peppers"}; }

Image make_scene(std::string_view name, std::size_t width, std::size_t height, std::uint64_t seed) {
  if (name == "blobs") return blob_phantom(width, height, seed);
  if (name == "chart") return resolution_chart(width, height);
  if (name == "logo") return text_logo(width, height);
  if (name.starts_with("logo:")) return text_logo(width, height, name.substr(5));
  if (name == "texture") return texture_1f(width, height, seed);
  if (name == "peppers") return peppers_like(width, height, seed);
  throw InvalidArgument("unknown synthetic scene '" + std::string(name) + "'");
}

ColorImage make_color_scene(std::string_view name, std::size_t width, std::size_t height, std::uint64_t seed) {
  if (name == "peppers") return peppers_like_color(width, height, seed);
  return ColorImage::from_gray(make_scene(name, width, height, seed));
}

}  // namespace fspi
