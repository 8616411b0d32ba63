#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fspi/detector.hpp"
#include "fspi/frequency.hpp"
#include "fspi/illumination.hpp"
#include "fspi/image.hpp"
#include "fspi/recon.hpp"

namespace fspi {

/// Partition of the host frequency grid into R1 (host only) and R2 (multiplexed with the
/// watermark).
struct FrequencyMask {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t r1_side = 0;
  /// 1 for R1, 0 for R2, index v * width + u.
  std::vector<std::uint8_t> r1;

  bool in_r1(Frequency f) const { return r1[f.v * width + f.u] != 0; }
  std::size_t r1_count() const;
  std::size_t r2_count() const { return width * height - r1_count(); }
  /// R2 frequencies in raster order (v outer, u inner).
  std::vector<Frequency> r2_frequencies() const;
};

/// R1 is the r1_side x r1_side block of wrapped indices [-r1_side/2, r1_side - r1_side/2 - 1] in
/// each direction. For odd r1_side the block is symmetric and conjugate-closed.
/// r1_side = 0 is rejected unless allow_empty_r1 is set.
FrequencyMask build_mask(std::size_t width, std::size_t height, std::size_t r1_side, bool allow_empty_r1 = false);

/// floor(|R2| / 4): watermark coefficients the mask can carry.
std::size_t capacity(const FrequencyMask& mask);

/// The `count` watermark-grid frequencies nearest DC (frequencies_by_distance order).
std::vector<Frequency> default_watermark_freqs(std::size_t width, std::size_t height, std::size_t count);

/// One host four-step group carrying one watermark slot (frequency, phase).
struct MappingEntry {
  Frequency host;
  Frequency watermark;
  int phase_code = 0;

  bool operator==(const MappingEntry&) const = default;
};

/// The secret key of the scheme: which host groups carry which watermark slots, plus the
/// constant the watermark coefficients were divided by.
struct FrequencyMapping {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t watermark_width = 0;
  std::size_t watermark_height = 0;
  std::size_t r1_side = 0;
  std::optional<std::uint64_t> key_seed;
  double normalization = 1.0;
  std::vector<MappingEntry> entries;

  /// Checks that host groups lie in R2 and are used once, slots are used once, and every
  /// watermark frequency carries all four phases.
  void validate() const;
  FrequencyMask mask() const;

  bool operator==(const FrequencyMapping&) const = default;
};

/// Assigns watermark slot 4 j + k (frequency j of `watermark_freqs`, phase k) to an R2 group.
/// Without a key, slot i goes to the i-th R2 group in raster order. With a key, slot i goes to
/// R2 group perm[i] where perm = seeded_permutation(key, |R2|).
FrequencyMapping build_mapping(const FrequencyMask& mask, const std::vector<Frequency>& watermark_freqs,
                               std::size_t watermark_width, std::size_t watermark_height,
                               std::optional<std::uint64_t> key_seed = std::nullopt);

/// Four-step coefficients W_k(f1) = sum R_W P_k of each mapped slot, divided by their maximum.
/// Returns the normalised values in mapping entry order and the maximum in `normalization`.
std::vector<double> stego_coefficients(const Image& watermark, const FrequencyMapping& mapping,
                                       const PatternParams& params, double* normalization = nullptr);

/// Weights for a four-step host plan: 1 for every unmapped group, the mapped slot's normalised
/// coefficient on all four frames of a mapped group. The returned signal's normalization is the
/// value extraction needs in FrequencyMapping::normalization; k2 is the R1 value 2.
TVSignal stego_weights(const Image& watermark, const FrequencyMapping& mapping, const AcquisitionPlan& plan);

/// I_0 + I_pi of the first R1 group in plan order. Throws InvalidArgument if R1 has no group.
double k1_from_sequence(const MeasurementSequence& seq, const AcquisitionPlan& plan, const FrequencyMask& mask);

/// Normalised weights (I'_0 + I'_pi/2 + I'_pi + I'_3pi/2) / (2 K1) per mapping entry. K1 comes from
/// k1_from_sequence when not supplied.
std::vector<double> extract_weights(const MeasurementSequence& seq, const FrequencyMapping& mapping,
                                    const AcquisitionPlan& plan, std::optional<double> k1 = std::nullopt);

/// Watermark spectrum (gain 2b) over the watermark grid with known = mapped frequencies only.
SpectrumGrid extract_watermark(const MeasurementSequence& seq, const FrequencyMapping& mapping,
                               const AcquisitionPlan& plan, std::optional<double> k1 = std::nullopt);

enum class HostRegions { AllRegions, R1Only };

/// Host image from a stego acquisition. AllRegions inverts every assembled group (R2 carries
/// weight-scaled host coefficients); R1Only zeroes R2 first.
Image stego_host_reconstruct(const MeasurementSequence& seq, const AcquisitionPlan& plan, const FrequencyMask& mask,
                             HostRegions regions);

}  // namespace fspi
