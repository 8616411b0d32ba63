#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fspi/image.hpp"

namespace fspi::cli {

/// Every knob of every command. Each subcommand binds the fields it uses.
struct ExperimentConfig {
  /// Image path, or synth:<name> for a built-in scene (see fspi::scene_names).
  std::string scene = "synth:peppers";
  std::string watermark = "synth:logo";
  /// Side of synthetic scenes; file inputs must match it when given explicitly.
  std::optional<std::size_t> size;
  std::uint64_t scene_seed = 1;
  std::uint64_t watermark_seed = 7;

  std::string mode = "four-step";
  std::string sampling = "full";
  std::uint64_t pattern_seed = 0;

  std::vector<double> dc_offsets{0.0};
  std::vector<double> q_values;
  /// Color embedding: one offset per channel.
  std::vector<double> channel_dc{0.0, 0.0, 0.0};
  /// Fraction of low frequencies that carry the watermark (1 keeps the whole signal).
  double tv_fraction = 1.0;
  /// Watermark spectral region: all, half-u or lowfreq:<p>.
  std::string watermark_region = "all";

  std::optional<double> snr_db;
  std::uint64_t noise_seed = 1;
  std::vector<double> snr_sweep{0, 5, 10, 15, 20, 25, 30, 35, 40};
  std::size_t repetitions = 10;
  std::string pipeline = "watermark";

  /// Metric range mapping in sweeps: min-max, or reference (the reference image's range for both).
  std::string metric_range = "min-max";

  std::string sweep_kind = "sampling";
  std::vector<double> fractions{0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 1.0};

  std::string method = "divide";
  std::string filter = "half-u";
  std::optional<double> epsilon;

  std::size_t r1_side = 60;
  std::optional<std::uint64_t> key_seed;
  std::optional<std::uint64_t> wrong_key_seed;
  std::size_t watermark_size = 0;

  std::filesystem::path plan_path;
  std::filesystem::path measurements_path;
  std::filesystem::path tv_path;
  std::filesystem::path mapping_path;
  std::filesystem::path reference_path;

  std::filesystem::path out_dir = "out";
};

/// "a,b,c" or "lo:step:hi" (inclusive, step > 0).
std::vector<double> parse_number_list(std::string_view text);

/// Scene from a path or synth:<name>.
Image load_scene(const std::string& spec, std::optional<std::size_t> size, std::uint64_t seed);
ColorImage load_color_scene(const std::string& spec, std::optional<std::size_t> size, std::uint64_t seed);

/// Shortest round-trip, locale independent.
std::string fmt(double value);

}  // namespace fspi::cli
