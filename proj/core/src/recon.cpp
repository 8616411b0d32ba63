#include "fspi/recon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "colormap.hpp"
#include "fspi/error.hpp"
#include "fspi/fft.hpp"
#include "kahan.hpp"
#include "pattern_kernel.hpp"

namespace fspi {

namespace {

void check_sequence(const MeasurementSequence& seq, const AcquisitionPlan& plan) {
  if (seq.size() != plan.size()) {
    throw DimensionMismatch("measurement sequence has " + std::to_string(seq.size()) +
                            " entries for a plan of " + std::to_string(plan.size()));
  }
  if (!seq.plan_id.empty() && seq.plan_id != plan_id(plan)) {
    throw ModeMismatch("measurement sequence was produced by plan " + seq.plan_id + ", not " + plan_id(plan));
  }
  for (double v : seq.values) {
    if (!std::isfinite(v)) throw InvalidArgument("measurement sequence contains a non-finite value");
  }
}

}  // namespace

std::size_t SpectrumGrid::known_count() const {
  return static_cast<std::size_t>(std::count(known.begin(), known.end(), std::uint8_t{1}));
}

double fourier_gain(const AcquisitionPlan& plan) {
  switch (plan.mode) {
    case PatternMode::FourStepSinusoid: return 2.0 * plan.params.b;
    case PatternMode::ThreeStepSinusoid: return 3.0 * plan.params.b;
    default: throw ModeMismatch("fourier_gain needs a four-step or three-step plan");
  }
}

SpectrumGrid assemble_spectrum(const MeasurementSequence& seq, const AcquisitionPlan& plan) {
  if (plan.mode != PatternMode::FourStepSinusoid && plan.mode != PatternMode::ThreeStepSinusoid) {
    throw ModeMismatch(std::string("cannot assemble a spectrum from a ") + std::string(to_string(plan.mode)) +
                       " plan");
  }
  const auto groups = plan.groups();
  check_sequence(seq, plan);
  const std::size_t w = plan.width();
  const std::size_t h = plan.height();
  SpectrumGrid spec(w, h);
  const double sqrt3 = std::sqrt(3.0);

  for (const auto& g : groups) {
    std::array<double, 4> by_phase{};
    for (std::size_t k = 0; k < g.count; ++k) {
      by_phase[static_cast<std::size_t>(plan.entries[g.first + k].phase_code)] = seq.values[g.first + k];
    }
    std::complex<double> c;
    if (plan.mode == PatternMode::FourStepSinusoid) {
      // A two-entry group measures phases 0 and pi only; its imaginary part is zero.
      const double im = g.count == 4 ? by_phase[1] - by_phase[3] : 0.0;
      c = {by_phase[0] - by_phase[2], im};
    } else {
      c = {2.0 * by_phase[0] - by_phase[1] - by_phase[2], sqrt3 * (by_phase[1] - by_phase[2])};
    }
    if (is_self_conjugate(g.frequency, w, h)) c.imag(0.0);
    spec.set(g.frequency, c);
  }
  return spec;
}

SpectrumGrid complete_symmetry(SpectrumGrid spec) {
  const std::size_t w = spec.width;
  const std::size_t h = spec.height;
  const auto original = spec.known;
  for (std::size_t v = 0; v < h; ++v) {
    for (std::size_t u = 0; u < w; ++u) {
      const Frequency f{u, v};
      const Frequency c = conjugate(f, w, h);
      if (original[spec.index(f)]) {
        if (c == f) spec.coeffs[spec.index(f)].imag(0.0);
      } else if (original[spec.index(c)]) {
        spec.set(f, std::conj(spec.coeffs[spec.index(c)]));
      }
    }
  }
  return spec;
}

std::vector<std::complex<double>> inverse_transform(const SpectrumGrid& spec) {
  if (spec.width == 0 || spec.height == 0 || spec.coeffs.size() != spec.width * spec.height) {
    throw DimensionMismatch("spectrum grid storage does not match its dimensions");
  }
  return fft2_inverse(spec.coeffs, spec.width, spec.height);
}

Image reconstruct(const SpectrumGrid& spec) {
  const auto field = inverse_transform(spec);
  Image out(spec.width, spec.height);
  auto px = out.values();
  for (std::size_t i = 0; i < field.size(); ++i) px[i] = field[i].real();
  return out;
}

Image cgi_reconstruct(const MeasurementSequence& seq, const AcquisitionPlan& plan) {
  if (plan.mode != PatternMode::Random && plan.mode != PatternMode::SinusoidOrthogonal) {
    throw ModeMismatch("correlation reconstruction needs a random or sinusoid-orthogonal plan");
  }
  plan.validate();
  check_sequence(seq, plan);
  const std::size_t n = plan.width() * plan.height();
  const std::size_t m = seq.size();

  detail::NeumaierSum mean_acc;
  for (double v : seq.values) mean_acc.add(v);
  const double mean_i = mean_acc.value() / static_cast<double>(m);

  const detail::PlanKernel kernel(plan);
  std::vector<double> pattern(n);
  std::vector<double> cross(n, 0.0);
  std::vector<double> pattern_sum(n, 0.0);
  detail::NeumaierSum dev_acc;
  for (std::size_t i = 0; i < m; ++i) {
    kernel.fill(plan.entries[i], pattern);
    const double dev = seq.values[i] - mean_i;
    dev_acc.add(dev);
    for (std::size_t p = 0; p < n; ++p) {
      cross[p] += dev * pattern[p];
      pattern_sum[p] += pattern[p];
    }
  }
  const double inv_m = 1.0 / static_cast<double>(m);
  const double mean_dev = dev_acc.value() * inv_m;
  Image out(plan.width(), plan.height());
  auto px = out.values();
  for (std::size_t p = 0; p < n; ++p) px[p] = cross[p] * inv_m - mean_dev * pattern_sum[p] * inv_m;
  return out;
}

void walsh_hadamard_transform(std::vector<double>& data) {
  const std::size_t n = data.size();
  if (!std::has_single_bit(n)) throw InvalidArgument("Walsh-Hadamard transform needs a power-of-two length");
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const double x = data[j];
        const double y = data[j + len];
        data[j] = x + y;
        data[j + len] = x - y;
      }
    }
  }
}

Image hadamard_reconstruct(const MeasurementSequence& seq, const AcquisitionPlan& plan) {
  if (plan.mode != PatternMode::HadamardDiff) throw ModeMismatch("hadamard_reconstruct needs a Hadamard plan");
  const auto groups = plan.groups();
  check_sequence(seq, plan);
  const std::size_t w = plan.width();
  const std::size_t n = w * plan.height();
  if (groups.size() != n) {
    throw InvalidArgument("Hadamard plan covers " + std::to_string(groups.size()) + " of " + std::to_string(n) +
                          " basis rows");
  }
  std::vector<double> d(n, 0.0);
  for (const auto& g : groups) {
    double diff = 0.0;
    for (std::size_t k = 0; k < g.count; ++k) {
      const double v = seq.values[g.first + k];
      diff += plan.entries[g.first + k].polarity == Polarity::Plus ? v : -v;
    }
    d[g.frequency.v * w + g.frequency.u] = diff;
  }
  walsh_hadamard_transform(d);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (double& x : d) x *= inv_n;
  return Image(w, plan.height(), std::move(d));
}

Image reconstruct_image(const MeasurementSequence& seq, const AcquisitionPlan& plan) {
  switch (plan.mode) {
    case PatternMode::FourStepSinusoid:
    case PatternMode::ThreeStepSinusoid:
      return reconstruct(complete_symmetry(assemble_spectrum(seq, plan)));
    case PatternMode::HadamardDiff:
      return hadamard_reconstruct(seq, plan);
    case PatternMode::Random:
    case PatternMode::SinusoidOrthogonal:
      return cgi_reconstruct(seq, plan);
  }
  throw ModeMismatch("unknown pattern mode");
}

ColorImage spectrum_pseudocolor(const SpectrumGrid& spec) {
  const std::size_t w = spec.width;
  const std::size_t h = spec.height;
  if (w == 0 || h == 0) throw InvalidArgument("empty spectrum");
  Image mag(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const Frequency f{(x + w - w / 2) % w, (y + h - h / 2) % h};
      mag(x, y) = std::log10(1.0 + std::abs(spec.at(f)));
    }
  }
  const Image t = normalize_min_max(mag);
  ColorImage out;
  for (auto& c : out.channels) c = Image(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const auto rgb = detail::viridis(t(x, y));
      for (std::size_t c = 0; c < 3; ++c) out.channels[c](x, y) = rgb[c];
    }
  }
  return out;
}

}  // namespace fspi
