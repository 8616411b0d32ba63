#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fspi {

/// Row-major complex grid transforms, index v * width + u.
///
/// forward:  X(u,v) = sum_{x,y} x(x,y) exp(-2 pi j (u x / W + v y / H))
/// inverse:  x(x,y) = 1/(W H) sum_{u,v} X(u,v) exp(+2 pi j (u x / W + v y / H))
///
/// Results are bit-identical for identical inputs.
std::vector<std::complex<double>> fft2_forward(const std::vector<std::complex<double>>& data,
                                               std::size_t width, std::size_t height);
std::vector<std::complex<double>> fft2_inverse(const std::vector<std::complex<double>>& data,
                                               std::size_t width, std::size_t height);

}  // namespace fspi
