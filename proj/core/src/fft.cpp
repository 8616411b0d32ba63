#include "fspi/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>

#include "fspi/error.hpp"

namespace fspi {

namespace {

// The FFTW planner is not thread-safe; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
struct PlanDestroy {
  void operator()(fftw_plan_s* p) const noexcept {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};

std::vector<std::complex<double>> transform(const std::vector<std::complex<double>>& data,
                                            std::size_t width, std::size_t height, int sign) {
  const std::size_t n = width * height;
  if (n == 0 || data.size() != n) {
    throw DimensionMismatch("fft2: buffer of " + std::to_string(data.size()) + " for " +
                            std::to_string(width) + "x" + std::to_string(height));
  }
  std::unique_ptr<fftw_complex, FftwFree> buf(fftw_alloc_complex(n));
  if (!buf) throw Error("fft2: allocation failed");

  std::unique_ptr<fftw_plan_s, PlanDestroy> plan;
  {
    std::lock_guard lock(planner_mutex());
    // Row-major: the slow dimension (rows) comes first.
    plan.reset(fftw_plan_dft_2d(static_cast<int>(height), static_cast<int>(width), buf.get(),
                                buf.get(), sign, FFTW_ESTIMATE));
  }
  if (!plan) throw Error("fft2: planning failed");

  static_assert(sizeof(std::complex<double>) == sizeof(fftw_complex));
  // fftw_complex and std::complex<double> are layout-compatible.
  auto* cbuf = reinterpret_cast<std::complex<double>*>(buf.get());
  std::copy(data.begin(), data.end(), cbuf);
  fftw_execute(plan.get());
  std::vector<std::complex<double>> out(cbuf, cbuf + n);
  return out;
}

}  // namespace

std::vector<std::complex<double>> fft2_forward(const std::vector<std::complex<double>>& data,
                                               std::size_t width, std::size_t height) {
  return transform(data, width, height, FFTW_FORWARD);
}

std::vector<std::complex<double>> fft2_inverse(const std::vector<std::complex<double>>& data,
                                               std::size_t width, std::size_t height) {
  auto out = transform(data, width, height, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(width * height);
  for (auto& c : out) c *= scale;
  return out;
}

}  // namespace fspi
