#pragma once

#include <ostream>

#include "cli/config.hpp"

namespace fspi::cli {

/// Each command writes its artifacts under cfg.out_dir and a short summary to `log`.
/// Library errors propagate as fspi::Error.

/// plan.txt, measurements.csv, spectrum.csv + spectrum.ppm (sinusoid modes), recon.pgm,
/// recon.csv (scene units where the gain is known) and report.json against the scene.
void run_acquire(const ExperimentConfig& cfg, std::ostream& log);

/// One weighted acquisition per DC offset (or per requested Q): tv_<i>.csv,
/// measurements_<i>.csv, fused_<i>.pgm/.csv, plus plan.txt, summary.csv and region.txt
/// when the watermark is confined to a spectral region.
void run_embed(const ExperimentConfig& cfg, std::ostream& log);

/// Divide (needs --tv) or filter (half-u, lowfreq:<p>, custom:<file>) de-watermarking of a
/// stored acquisition: dewatermarked.pgm/.csv and report.json when a reference is given.
void run_dewatermark(const ExperimentConfig& cfg, std::ostream& log);

/// Steganographic acquisition: plan.txt, measurements.csv, mapping.csv, tv.csv,
/// embedded_weights.csv, host_all.pgm, host_r1.pgm and report.json.
void run_stego_embed(const ExperimentConfig& cfg, std::ostream& log);

/// Watermark extraction from a stego acquisition: weights.csv, watermark.pgm/.csv and
/// report.json when a reference is given. --key-seed replaces the stored key.
void run_stego_extract(const ExperimentConfig& cfg, std::ostream& log);

/// Per-channel embedding: fused.ppm and fused_{r,g,b}.pgm.
void run_color_embed(const ExperimentConfig& cfg, std::ostream& log);

/// Repeated noisy runs of a pipeline: <target>_rows.csv and <target>_curve.csv.
void run_sweep_noise(const ExperimentConfig& cfg, std::ostream& log);

/// Fused-image quality against the full acquisition as the sampling fraction or the TV
/// signal length varies: <kind>.csv and fused_<i>.pgm.
void run_sweep_sampling(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace fspi::cli
