#pragma once

#include <optional>
#include <string_view>

#include "fspi/detector.hpp"
#include "fspi/frequency.hpp"
#include "fspi/recon.hpp"

namespace fspi {

/// Entry i becomes seq_i / max(w_i, epsilon). The default epsilon is 1e-6 times the largest weight.
MeasurementSequence divide_dewatermark(const MeasurementSequence& seq, const TVSignal& tv,
                                       std::optional<double> epsilon = std::nullopt);

/// Frequencies to erase from an assembled spectrum.
struct FilterRegion {
  enum class Application {
    /// The region contains the conjugate of each of its members.
    ConjugateClosed,
    /// The region is erased before complete_symmetry, which refills it from the clean conjugates.
    BeforeSymmetry,
  };

  FrequencyRegion erase;
  Application application = Application::BeforeSymmetry;

  /// Throws InvalidArgument when declared ConjugateClosed but the region is not.
  void validate() const;

  /// The half_u_region key used by the half-spectrum watermark scheme.
  static FilterRegion half_u(std::size_t width, std::size_t height);
  /// low_frequency_region(fraction); declared ConjugateClosed when it is.
  static FilterRegion low_frequency(std::size_t width, std::size_t height, double fraction);
};

std::string_view to_string(FilterRegion::Application app) noexcept;

/// Zeroes the coefficients inside the region and marks them unknown.
SpectrumGrid filter_dewatermark(SpectrumGrid spec, const FilterRegion& region);

/// filter_dewatermark, then complete_symmetry for BeforeSymmetry regions, then reconstruct.
Image filter_reconstruct(const SpectrumGrid& spec, const FilterRegion& region);

}  // namespace fspi
