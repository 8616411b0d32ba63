#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fspi/detector.hpp"
#include "fspi/frequency.hpp"
#include "fspi/illumination.hpp"
#include "fspi/image.hpp"
#include "fspi/recon.hpp"

namespace fspi {

/// Seeded pixel bijection on {0..size-1}; expands via seeded_permutation(seed, size).
struct PermutationKey {
  std::uint64_t seed = 0;
  std::size_t size = 0;

  std::vector<std::size_t> expand() const;
  bool operator==(const PermutationKey&) const = default;
};

/// out[i] = img[perm[i]].
Image scramble(const Image& img, const PermutationKey& key);
/// Inverse of scramble: out[perm[i]] = img[i].
Image unscramble(const Image& img, const PermutationKey& key);

/// Watermark coefficients W_i = sum (R_W + dc_offset) P_i over every plan entry, divided by
/// their maximum. k2 = 2a sum(R_W + dc_offset) / max, normalization = max.
TVSignal watermark_tv(const Image& watermark, const AcquisitionPlan& plan, double dc_offset);

/// K2 = 2a sum(R_W + dc_offset) before normalization.
double k2(const Image& watermark, double dc_offset, const PatternParams& params);

/// Q = K1 / K2 on pre-normalization sums.
double q_factor(const Image& scene, const Image& watermark, double dc_offset, const PatternParams& params);

/// dc_offset that gives Q = q for this scene and watermark. Throws InvalidArgument when q is
/// above the dc_offset = 0 value (the offset would have to be negative).
double dc_offset_for_q(const Image& scene, const Image& watermark, double q, const PatternParams& params);

/// (K2/2) host_recon + (K1/2) watermark_recon, both reconstructions at the same gain.
Image fuse_predict(const Image& host_recon, const Image& watermark_recon, double k1, double k2);

/// Replaces the weights of every group whose frequency lies outside `keep` with the flat
/// value k2/2 in all of its frames, so the watermark spectrum is zero there and the fused
/// spectrum is the host scaled by k2/2. Sinusoid four-step plans only.
TVSignal confine_tv(const TVSignal& tv, const AcquisitionPlan& plan, const FrequencyRegion& keep);

/// confine_tv to the `fraction` of frequencies nearest DC: only that part of the signal
/// carries watermark information.
TVSignal shorten_tv(const TVSignal& tv, const AcquisitionPlan& plan, double fraction);

struct EmbedResult {
  TVSignal tv;
  MeasurementSequence measurements;
  /// Raw fused reconstruction (see reconstruct_image).
  Image fused;
  double k1 = 0.0;
  /// Pre-normalization K2 and Q.
  double k2 = 0.0;
  double q = 0.0;
};

/// Weighted acquisition of `scene` with the watermark's TV signal, then reconstruction.
EmbedResult embed(const Image& scene, const Image& watermark, const AcquisitionPlan& plan, double dc_offset,
                  const NoiseModel& noise = {});

/// Same as embed with a caller-supplied TV signal (e.g. confined or shortened).
EmbedResult embed_with_tv(const Image& scene, const TVSignal& tv, const AcquisitionPlan& plan,
                          const NoiseModel& noise = {});

/// Analytic fused image fuse_predict(recon(R), recon(W), K1, tv.k2), where recon(W) treats the
/// TV weights as a measurement sequence. Exact for noise-free four-step and Hadamard plans;
/// the first-order approximation for correlation-decoded modes.
Image predicted_fusion(const Image& scene, const TVSignal& tv, const AcquisitionPlan& plan);

/// Runs embed independently on each channel with its own dc_offset; every channel uses the
/// same noise model and seed.
ColorImage embed_color(const ColorImage& scene, const ColorImage& watermark, const AcquisitionPlan& plan,
                       const std::array<double, 3>& dc_offsets, const NoiseModel& noise = {});

/// Mean of the min-max normalised image over pixels where the watermark exceeds half its
/// maximum, minus the mean over the remaining pixels.
double watermark_contrast(const Image& fused, const Image& watermark);

}  // namespace fspi
