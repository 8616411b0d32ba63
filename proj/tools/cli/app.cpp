#include "cli/app.hpp"

#include <exception>
#include <filesystem>
#include <functional>
#include <new>
#include <optional>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "fspi/error.hpp"

namespace fspi::cli {

namespace {

using Runner = std::function<void(const ExperimentConfig&, std::ostream&)>;

void add_out(CLI::App& sub, ExperimentConfig& cfg) {
  sub.add_option("-o,--out", cfg.out_dir, "Output directory")->capture_default_str();
}

void add_scene(CLI::App& sub, ExperimentConfig& cfg) {
  sub.add_option("--scene", cfg.scene, "Scene image path or synth:<name>")->capture_default_str();
  sub.add_option_function<std::size_t>(
      "--size", [&cfg](const std::size_t& n) { cfg.size = n; }, "Side of synthetic scenes (default 64)");
  sub.add_option("--scene-seed", cfg.scene_seed, "Seed of synthetic scenes")->capture_default_str();
}

void add_watermark(CLI::App& sub, ExperimentConfig& cfg) {
  sub.add_option("--watermark", cfg.watermark, "Watermark image path or synth:<name>")->capture_default_str();
  sub.add_option("--watermark-seed", cfg.watermark_seed, "Seed of synthetic watermarks")->capture_default_str();
}

void add_plan(CLI::App& sub, ExperimentConfig& cfg) {
  sub.add_option("--mode", cfg.mode, "four-step, three-step, sin-orth, hadamard or random")->capture_default_str();
  sub.add_option("--sampling", cfg.sampling, "full, half or lowfreq:<p>")->capture_default_str();
  sub.add_option("--pattern-seed", cfg.pattern_seed, "Seed of random patterns")->capture_default_str();
}

void add_noise(CLI::App& sub, ExperimentConfig& cfg) {
  sub.add_option_function<double>(
      "--snr", [&cfg](const double& v) { cfg.snr_db = v; }, "System SNR in dB (noise-free when omitted)");
  sub.add_option("--noise-seed", cfg.noise_seed, "Noise seed")->capture_default_str();
}

void add_list(CLI::App& sub, const std::string& name, std::vector<double>& target, const std::string& help) {
  // Config files may hand over a list as an array, so elements are rejoined before parsing.
  sub.add_option_function<std::vector<std::string>>(
         name,
         [&target](const std::vector<std::string>& parts) {
           std::string joined;
           for (const auto& p : parts) joined += (joined.empty() ? "" : ",") + p;
           target = parse_number_list(joined);
         },
         help + " (a,b,c or lo:step:hi)")
      ->allow_extra_args(false);
}

void add_watermark_shape(CLI::App& sub, ExperimentConfig& cfg) {
  add_list(sub, "--dc", cfg.dc_offsets, "Watermark DC offsets");
  sub.add_option("--tv-fraction", cfg.tv_fraction, "Low-frequency fraction that carries the watermark")
      ->capture_default_str();
  sub.add_option("--watermark-region", cfg.watermark_region, "all, half-u or lowfreq:<p>")->capture_default_str();
}

void add_stego_geometry(CLI::App& sub, ExperimentConfig& cfg) {
  sub.add_option("--r1-side", cfg.r1_side, "Side of the host-only low-frequency block")->capture_default_str();
  sub.add_option_function<std::uint64_t>(
      "--key-seed", [&cfg](const std::uint64_t& k) { cfg.key_seed = k; }, "Mapping key seed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  CLI::App app{"Fourier single-pixel imaging with a time-varying light source", "fspi"};
  app.set_config("--config", "", "key=value configuration file; command-line options override it");
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, Runner>> commands;

  auto* acquire = app.add_subcommand("acquire", "Acquire a scene and reconstruct it");
  add_scene(*acquire, cfg);
  add_plan(*acquire, cfg);
  add_noise(*acquire, cfg);
  add_out(*acquire, cfg);
  commands.emplace_back(acquire, run_acquire);

  auto* embed = app.add_subcommand("embed", "Weighted acquisition with a watermark TV signal, one run per DC offset");
  add_scene(*embed, cfg);
  add_watermark(*embed, cfg);
  add_plan(*embed, cfg);
  add_watermark_shape(*embed, cfg);
  add_list(*embed, "--q", cfg.q_values, "Target Q values (override --dc)");
  add_noise(*embed, cfg);
  add_out(*embed, cfg);
  commands.emplace_back(embed, run_embed);

  auto* dewm = app.add_subcommand("dewatermark", "Remove the watermark from a stored acquisition");
  dewm->add_option("--plan", cfg.plan_path, "Plan file")->required();
  dewm->add_option("--measurements", cfg.measurements_path, "Measurement CSV")->required();
  dewm->add_option("--method", cfg.method, "divide or filter")->capture_default_str();
  dewm->add_option("--tv", cfg.tv_path, "TV signal CSV (divide)");
  dewm->add_option("--filter", cfg.filter, "half-u, lowfreq:<p> or custom:<file> (filter)")->capture_default_str();
  dewm->add_option_function<double>(
      "--epsilon", [&cfg](const double& e) { cfg.epsilon = e; }, "Smallest divisor (divide)");
  dewm->add_option("--reference", cfg.reference_path, "Reference image for the metric report");
  add_out(*dewm, cfg);
  commands.emplace_back(dewm, run_dewatermark);

  auto* sembed = app.add_subcommand("stego-embed", "Hide a watermark in the high frequencies of an acquisition");
  add_scene(*sembed, cfg);
  add_watermark(*sembed, cfg);
  sembed->add_option("--watermark-size", cfg.watermark_size, "Watermark side (default: host side)");
  add_stego_geometry(*sembed, cfg);
  add_noise(*sembed, cfg);
  add_out(*sembed, cfg);
  commands.emplace_back(sembed, run_stego_embed);

  auto* sextract = app.add_subcommand("stego-extract", "Extract a hidden watermark with its mapping");
  sextract->add_option("--plan", cfg.plan_path, "Plan file")->required();
  sextract->add_option("--measurements", cfg.measurements_path, "Measurement CSV")->required();
  sextract->add_option("--mapping", cfg.mapping_path, "Mapping file")->required();
  sextract->add_option_function<std::uint64_t>(
      "--key-seed", [&cfg](const std::uint64_t& k) { cfg.key_seed = k; }, "Rebuild the mapping with this key");
  sextract->add_option("--reference", cfg.reference_path, "Reference watermark for the metric report");
  add_out(*sextract, cfg);
  commands.emplace_back(sextract, run_stego_extract);

  auto* color = app.add_subcommand("color-embed", "Per-channel watermark embedding of a color scene");
  add_scene(*color, cfg);
  add_watermark(*color, cfg);
  add_plan(*color, cfg);
  add_list(*color, "--channel-dc", cfg.channel_dc, "DC offsets for r,g,b");
  add_noise(*color, cfg);
  add_out(*color, cfg);
  commands.emplace_back(color, run_color_embed);

  auto* snoise = app.add_subcommand("sweep-noise", "Repeated noisy runs over a list of SNRs");
  add_scene(*snoise, cfg);
  add_watermark(*snoise, cfg);
  add_plan(*snoise, cfg);
  add_watermark_shape(*snoise, cfg);
  add_stego_geometry(*snoise, cfg);
  snoise->add_option("--pipeline", cfg.pipeline, "watermark, dewatermark or stego")->capture_default_str();
  add_list(*snoise, "--snrs", cfg.snr_sweep, "SNR values in dB");
  snoise->add_option("--range", cfg.metric_range, "Metric range: min-max or reference")->capture_default_str();
  snoise->add_option("--repetitions", cfg.repetitions, "Seeds per SNR")->capture_default_str();
  snoise->add_option("--noise-seed", cfg.noise_seed, "First noise seed")->capture_default_str();
  add_out(*snoise, cfg);
  commands.emplace_back(snoise, run_sweep_noise);

  auto* ssampling = app.add_subcommand("sweep-sampling", "Fused quality against sampling rate or TV signal length");
  add_scene(*ssampling, cfg);
  add_watermark(*ssampling, cfg);
  ssampling->add_option("--mode", cfg.mode, "Pattern mode")->capture_default_str();
  add_list(*ssampling, "--dc", cfg.dc_offsets, "Watermark DC offset");
  ssampling->add_option("--range", cfg.metric_range, "Metric range: min-max or reference")->capture_default_str();
  ssampling->add_option("--kind", cfg.sweep_kind, "sampling or tv-length")->capture_default_str();
  add_list(*ssampling, "--fractions", cfg.fractions, "Fractions in (0, 1]");
  add_noise(*ssampling, cfg);
  add_out(*ssampling, cfg);
  commands.emplace_back(ssampling, run_sweep_sampling);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const fspi::Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  }

  try {
    for (const auto& [sub, runner] : commands) {
      if (sub->parsed()) runner(cfg, out);
    }
  } catch (const fspi::Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: io_error: " << e.what() << "\n";
    return 1;
  } catch (const std::bad_alloc&) {
    err << "error: out_of_memory: allocation failed\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace fspi::cli
