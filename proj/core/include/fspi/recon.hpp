#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fspi/detector.hpp"
#include "fspi/frequency.hpp"
#include "fspi/illumination.hpp"
#include "fspi/image.hpp"

namespace fspi {

/// Complex Fourier coefficients over the DFT grid with a per-frequency validity flag.
/// Unknown entries are held at exactly 0 + 0j.
struct SpectrumGrid {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::complex<double>> coeffs;
  std::vector<std::uint8_t> known;

  SpectrumGrid() = default;
  SpectrumGrid(std::size_t w, std::size_t h) : width(w), height(h), coeffs(w * h), known(w * h, 0) {}

  std::size_t index(Frequency f) const noexcept { return f.v * width + f.u; }
  std::complex<double> at(Frequency f) const { return coeffs[index(f)]; }
  bool is_known(Frequency f) const { return known[index(f)] != 0; }
  void set(Frequency f, std::complex<double> c) {
    coeffs[index(f)] = c;
    known[index(f)] = 1;
  }
  void forget(Frequency f) {
    coeffs[index(f)] = {};
    known[index(f)] = 0;
  }
  std::size_t known_count() const;
};

/// Linear gain g with reconstruct(assemble(measure(R))) = g * R for a noise-free full plan:
/// 2b for four-step, 3b for three-step.
double fourier_gain(const AcquisitionPlan& plan);

/// Four-step groups: C = (I_0 - I_pi) + j (I_pi/2 - I_3pi/2), equal to 2b * DFT(R)(u, v).
/// Three-step groups: C = (2 I_0 - I_2pi/3 - I_4pi/3) + j sqrt(3) (I_2pi/3 - I_4pi/3) = 3b * DFT(R).
/// Self-conjugate frequencies get a zero imaginary part.
SpectrumGrid assemble_spectrum(const MeasurementSequence& seq, const AcquisitionPlan& plan);

/// Fills each unknown entry whose conjugate is known with the conjugate value and zeroes the
/// imaginary part of known self-conjugate entries. Pairs with both members unknown stay unknown.
SpectrumGrid complete_symmetry(SpectrumGrid spec);

/// Inverse 2-D DFT (1/(W H) normalisation) of the coefficients, unknown treated as zero.
std::vector<std::complex<double>> inverse_transform(const SpectrumGrid& spec);

/// Real part of inverse_transform; no clipping or rescaling.
Image reconstruct(const SpectrumGrid& spec);

/// Ghost-imaging correlation image (1/M) sum_i (I_i - <I>) (P_i - <P>) for Random or
/// SinusoidOrthogonal plans.
Image cgi_reconstruct(const MeasurementSequence& seq, const AcquisitionPlan& plan);

/// Differential Hadamard image: d_k = I+_k - I-_k, then the inverse Sylvester transform
/// (1/N) H d. A noise-free scene R comes back as 2a * R.
Image hadamard_reconstruct(const MeasurementSequence& seq, const AcquisitionPlan& plan);

/// Mode-dispatching reconstruction: sinusoid plans assemble, complete symmetry and invert;
/// Hadamard plans use hadamard_reconstruct; random and sinusoid-orthogonal plans use correlation.
Image reconstruct_image(const MeasurementSequence& seq, const AcquisitionPlan& plan);

/// In-place natural-order fast Walsh-Hadamard transform (unnormalised). Size must be a power of two.
void walsh_hadamard_transform(std::vector<double>& data);

/// Display image of log10(1 + |C|), DC centred, mapped through the viridis colormap.
ColorImage spectrum_pseudocolor(const SpectrumGrid& spec);

/// Name of the colormap used by spectrum_pseudocolor.
inline constexpr const char* kSpectrumColormap = "viridis";

}  // namespace fspi
