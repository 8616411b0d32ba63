#pragma once

// Independent reference implementations for tests. Nothing here calls the library's
// transforms or generators.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fspi/image.hpp"

namespace oracle {

inline fspi::Image random_image(std::size_t w, std::size_t h, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  fspi::Image img(w, h);
  for (auto& v : img.values()) v = dist(gen);
  return img;
}

// X(u,v) = sum R(x,y) exp(-2 pi j (u x / W + v y / H)), phase reduced exactly in integers.
inline std::vector<std::complex<double>> direct_dft(const fspi::Image& img) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const std::size_t period = w * h;
  std::vector<std::complex<double>> out(w * h);
  for (std::size_t v = 0; v < h; ++v) {
    for (std::size_t u = 0; u < w; ++u) {
      std::complex<double> acc = 0.0;
      for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
          const std::size_t k = (u * x * h + v * y * w) % period;
          const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(period);
          acc += img(x, y) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
      }
      out[v * w + u] = acc;
    }
  }
  return out;
}

// Sylvester-Hadamard matrix of order n (power of two) built by Kronecker doubling.
inline std::vector<std::vector<int>> sylvester(std::size_t n) {
  std::vector<std::vector<int>> m{{1}};
  while (m.size() < n) {
    const std::size_t s = m.size();
    std::vector<std::vector<int>> next(2 * s, std::vector<int>(2 * s));
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        next[i][j] = m[i][j];
        next[i][j + s] = m[i][j];
        next[i + s][j] = m[i][j];
        next[i + s][j + s] = -m[i][j];
      }
    }
    m = std::move(next);
  }
  return m;
}

template <typename A, typename B>
double max_rel_error(const A& a, const B& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < std::size(a); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return den > 0.0 ? num / den : num;
}

inline double max_rel_error(const fspi::Image& a, const fspi::Image& b) {
  return max_rel_error(a.values(), b.values());
}

}  // namespace oracle
