#include "cli/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <limits>
#include <string>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "fspi/detector.hpp"
#include "fspi/dewatermark.hpp"
#include "fspi/error.hpp"
#include "fspi/illumination.hpp"
#include "fspi/io.hpp"
#include "fspi/metrics.hpp"
#include "fspi/recon.hpp"
#include "fspi/serialize.hpp"
#include "fspi/stego.hpp"
#include "fspi/watermark.hpp"

namespace fspi::cli {

namespace fs = std::filesystem;

namespace {

fs::path prepare_out(const ExperimentConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + cfg.out_dir.string() + "': " + ec.message());
  return cfg.out_dir;
}

void write_json(const fs::path& path, const nlohmann::json& j) { write_text_file(path, j.dump(2) + "\n"); }

NoiseModel noise_of(const ExperimentConfig& cfg) {
  return cfg.snr_db ? NoiseModel::gaussian(*cfg.snr_db, cfg.noise_seed) : NoiseModel::none();
}

AcquisitionPlan plan_of(const ExperimentConfig& cfg, const Image& scene) {
  PlanOptions opts;
  opts.seed = cfg.pattern_seed;
  return build_plan(parse_pattern_mode(cfg.mode), scene.width(), scene.height(), Sampling::parse(cfg.sampling), opts);
}

bool assembles(const AcquisitionPlan& plan) {
  return plan.mode == PatternMode::FourStepSinusoid || plan.mode == PatternMode::ThreeStepSinusoid;
}

// Raw reconstruction divided by its known gain, so a noise-free acquisition returns the scene.
Image scene_units(const Image& recon, const AcquisitionPlan& plan) {
  if (assembles(plan)) return scaled(recon, 1.0 / fourier_gain(plan));
  if (plan.mode == PatternMode::HadamardDiff) return scaled(recon, 1.0 / (2.0 * plan.params.a));
  return recon;
}

Image load_watermark(const ExperimentConfig& cfg, const Image& scene) {
  const std::size_t n = cfg.size.value_or(scene.width());
  Image wm = load_scene(cfg.watermark, cfg.watermark.starts_with("synth:") ? std::optional<std::size_t>(n) : cfg.size,
                        cfg.watermark_seed);
  require_same_shape(scene, wm, "watermark");
  return wm;
}

FilterRegion filter_of(const std::string& spec, std::size_t width, std::size_t height) {
  if (spec == "half-u") return FilterRegion::half_u(width, height);
  if (spec.starts_with("lowfreq:")) {
    return FilterRegion::low_frequency(width, height, parse_number_list(spec.substr(8)).at(0));
  }
  if (spec.starts_with("custom:")) {
    FilterRegion r = load_region(spec.substr(7));
    if (r.erase.width != width || r.erase.height != height) {
      throw DimensionMismatch("filter region grid does not match the acquisition");
    }
    return r;
  }
  throw InvalidArgument("unknown filter '" + spec + "' (expected half-u, lowfreq:<p> or custom:<file>)");
}

// TV signal with the configured shortening and spectral confinement applied.
TVSignal shaped_tv(const ExperimentConfig& cfg, const Image& wm, const AcquisitionPlan& plan, double dc) {
  TVSignal tv = watermark_tv(wm, plan, dc);
  if (cfg.tv_fraction < 1.0) tv = shorten_tv(tv, plan, cfg.tv_fraction);
  if (cfg.watermark_region != "all") {
    tv = confine_tv(tv, plan, filter_of(cfg.watermark_region, plan.width(), plan.height()).erase);
  }
  return tv;
}

std::string indexed(const char* stem, std::size_t i, const char* ext) {
  return std::string(stem) + "_" + std::to_string(i) + ext;
}

void write_recon(const fs::path& dir, const std::string& stem, const Image& recon, const AcquisitionPlan& plan,
                 const std::string& comment) {
  write_display_pgm(dir / (stem + ".pgm"), recon);
  write_matrix_csv(dir / (stem + ".csv"), scene_units(recon, plan), comment);
}

MetricRange range_for(const ExperimentConfig& cfg, const Image& reference) {
  if (cfg.metric_range == "min-max") return MetricRange::min_max();
  if (cfg.metric_range == "reference") {
    const auto [lo, hi] = std::minmax_element(reference.values().begin(), reference.values().end());
    return MetricRange::fixed(*lo, *hi);
  }
  throw InvalidArgument("unknown metric range '" + cfg.metric_range + "' (expected min-max or reference)");
}

std::string summary(const MetricReport& r) { return "PSNR " + fmt(r.psnr_db) + " dB, SSIM " + fmt(r.ssim); }

struct Curve {
  std::string target;
  std::vector<std::array<double, 4>> rows;  // snr, seed, psnr, ssim
};

void write_curve(const fs::path& dir, const Curve& c, const std::vector<double>& snrs, std::size_t reps,
                 const std::string& header) {
  std::string rows = "# " + header + " target=" + c.target + "\nsnr_db,seed,psnr_db,ssim\n";
  for (const auto& r : c.rows) {
    rows += fmt(r[0]) + "," + std::to_string(static_cast<std::uint64_t>(r[1])) + "," + fmt(r[2]) + "," + fmt(r[3]) + "\n";
  }
  write_text_file(dir / (c.target + "_rows.csv"), rows);
  std::string curve = "# " + header + " target=" + c.target + " repetitions=" + std::to_string(reps) +
                      "\nsnr_db,psnr_mean,psnr_std,ssim_mean,ssim_std\n";
  for (std::size_t s = 0; s < snrs.size(); ++s) {
    std::vector<double> p;
    std::vector<double> q;
    for (std::size_t k = 0; k < reps; ++k) {
      p.push_back(c.rows[s * reps + k][2]);
      q.push_back(c.rows[s * reps + k][3]);
    }
    const auto [pm, ps] = mean_std(p);
    const auto [qm, qs] = mean_std(q);
    curve += fmt(snrs[s]) + "," + fmt(pm) + "," + fmt(ps) + "," + fmt(qm) + "," + fmt(qs) + "\n";
  }
  write_text_file(dir / (c.target + "_curve.csv"), curve);
}

}  // namespace

void run_acquire(const ExperimentConfig& cfg, std::ostream& log) {
  const Image scene = load_scene(cfg.scene, cfg.size, cfg.scene_seed);
  const AcquisitionPlan plan = plan_of(cfg, scene);
  const fs::path dir = prepare_out(cfg);
  const MeasurementSequence seq = measure(scene, plan, noise_of(cfg));
  write_text_file(dir / "plan.txt", format_plan(plan));
  write_text_file(dir / "measurements.csv", format_measurements(seq));
  Image recon;
  if (assembles(plan)) {
    const SpectrumGrid spec = assemble_spectrum(seq, plan);
    const SpectrumGrid full = complete_symmetry(spec);
    write_text_file(dir / "spectrum.csv", format_spectrum(spec));
    write_ppm(dir / "spectrum.ppm", spectrum_pseudocolor(full));
    recon = reconstruct(full);
  } else {
    recon = reconstruct_image(seq, plan);
  }
  write_recon(dir, "recon", recon, plan, "reconstruction");
  const MetricReport report = compare(scene, recon, cfg.scene, "recon");
  write_json(dir / "report.json", to_json(report));
  log << "acquire: " << plan.size() << " patterns (" << to_string(plan.mode) << ", " << plan.sampling.to_string()
      << "), " << summary(report) << "\n";
}

void run_embed(const ExperimentConfig& cfg, std::ostream& log) {
  const Image scene = load_scene(cfg.scene, cfg.size, cfg.scene_seed);
  const Image wm = load_watermark(cfg, scene);
  const AcquisitionPlan plan = plan_of(cfg, scene);
  std::vector<double> dcs = cfg.dc_offsets;
  if (!cfg.q_values.empty()) {
    dcs.clear();
    for (double q : cfg.q_values) dcs.push_back(dc_offset_for_q(scene, wm, q, plan.params));
  }
  if (dcs.empty()) throw InvalidArgument("embed needs at least one DC offset or Q value");
  const fs::path dir = prepare_out(cfg);
  write_text_file(dir / "plan.txt", format_plan(plan));
  if (cfg.watermark_region != "all") {
    write_text_file(dir / "region.txt", format_region(filter_of(cfg.watermark_region, plan.width(), plan.height())));
  }
  std::string table = "# embed scene=" + cfg.scene + " watermark=" + cfg.watermark + " mode=" + cfg.mode +
                      " sampling=" + cfg.sampling + "\nindex,dc_offset,k1,k2,q,contrast,psnr_db,ssim\n";
  for (std::size_t i = 0; i < dcs.size(); ++i) {
    const TVSignal tv = shaped_tv(cfg, wm, plan, dcs[i]);
    const EmbedResult r = embed_with_tv(scene, tv, plan, noise_of(cfg));
    const Image predicted = predicted_fusion(scene, tv, plan);
    const MetricReport report = compare(predicted, r.fused, "predicted", indexed("fused", i, ""));
    write_text_file(dir / indexed("tv", i, ".csv"), format_tv(tv));
    write_text_file(dir / indexed("measurements", i, ".csv"), format_measurements(r.measurements));
    write_recon(dir, indexed("fused", i, ""), r.fused, plan, "fused dc_offset=" + fmt(dcs[i]));
    const double contrast = watermark_contrast(r.fused, wm);
    table += std::to_string(i) + "," + fmt(dcs[i]) + "," + fmt(r.k1) + "," + fmt(r.k2) + "," + fmt(r.q) + "," +
             fmt(contrast) + "," + fmt(report.psnr_db) + "," + fmt(report.ssim) + "\n";
    log << "embed[" << i << "]: dc " << fmt(dcs[i]) << ", Q " << fmt(r.q) << ", vs prediction " << summary(report)
        << "\n";
  }
  write_text_file(dir / "summary.csv", table);
}

void run_dewatermark(const ExperimentConfig& cfg, std::ostream& log) {
  if (cfg.plan_path.empty() || cfg.measurements_path.empty()) {
    throw InvalidArgument("dewatermark needs --plan and --measurements");
  }
  const AcquisitionPlan plan = load_plan(cfg.plan_path);
  const MeasurementSequence seq = load_measurements(cfg.measurements_path);
  Image recon;
  if (cfg.method == "divide") {
    if (cfg.tv_path.empty()) throw InvalidArgument("divide de-watermarking needs --tv");
    recon = reconstruct_image(divide_dewatermark(seq, load_tv(cfg.tv_path), cfg.epsilon), plan);
  } else if (cfg.method == "filter") {
    recon = filter_reconstruct(assemble_spectrum(seq, plan), filter_of(cfg.filter, plan.width(), plan.height()));
  } else {
    throw InvalidArgument("unknown method '" + cfg.method + "' (expected divide or filter)");
  }
  const fs::path dir = prepare_out(cfg);
  write_recon(dir, "dewatermarked", recon, plan, "dewatermarked method=" + cfg.method);
  if (!cfg.reference_path.empty()) {
    const MetricReport report = compare(read_gray(cfg.reference_path), recon, cfg.reference_path.string(), "dewatermarked");
    write_json(dir / "report.json", to_json(report));
    log << "dewatermark (" << cfg.method << "): " << summary(report) << "\n";
  } else {
    log << "dewatermark (" << cfg.method << "): wrote " << (dir / "dewatermarked.pgm").string() << "\n";
  }
}

void run_stego_embed(const ExperimentConfig& cfg, std::ostream& log) {
  const Image host = load_scene(cfg.scene, cfg.size, cfg.scene_seed);
  const std::size_t wsize = cfg.watermark_size ? cfg.watermark_size : host.width();
  const Image wm = load_scene(cfg.watermark,
                              cfg.watermark.starts_with("synth:") ? std::optional<std::size_t>(wsize)
                              : cfg.watermark_size                ? std::optional<std::size_t>(wsize)
                                                                  : std::nullopt,
                              cfg.watermark_seed);
  const AcquisitionPlan plan = build_plan(PatternMode::FourStepSinusoid, host.width(), host.height(), Sampling::full());
  const FrequencyMask mask = build_mask(host.width(), host.height(), cfg.r1_side);
  const auto freqs = default_watermark_freqs(wm.width(), wm.height(), capacity(mask));
  FrequencyMapping mapping = build_mapping(mask, freqs, wm.width(), wm.height(), cfg.key_seed);
  const TVSignal tv = stego_weights(wm, mapping, plan);
  mapping.normalization = tv.normalization;
  const auto embedded = stego_coefficients(wm, mapping, plan.params);
  const MeasurementSequence seq = measure(host, plan, tv, noise_of(cfg));

  const fs::path dir = prepare_out(cfg);
  write_text_file(dir / "plan.txt", format_plan(plan));
  write_text_file(dir / "measurements.csv", format_measurements(seq));
  write_text_file(dir / "mapping.csv", format_mapping(mapping));
  write_text_file(dir / "tv.csv", format_tv(tv));
  std::string weights = "# embedded watermark weights\nslot,weight\n";
  for (std::size_t i = 0; i < embedded.size(); ++i) weights += std::to_string(i) + "," + fmt(embedded[i]) + "\n";
  write_text_file(dir / "embedded_weights.csv", weights);

  const Image all = stego_host_reconstruct(seq, plan, mask, HostRegions::AllRegions);
  const Image r1 = stego_host_reconstruct(seq, plan, mask, HostRegions::R1Only);
  write_recon(dir, "host_all", all, plan, "host all regions");
  write_recon(dir, "host_r1", r1, plan, "host R1 only");
  const MetricReport rall = compare(host, all, cfg.scene, "host_all");
  const MetricReport rr1 = compare(host, r1, cfg.scene, "host_r1");
  nlohmann::json j;
  j["host_all"] = to_json(rall);
  j["host_r1"] = to_json(rr1);
  j["r2_count"] = mask.r2_count();
  j["capacity"] = capacity(mask);
  if (all.same_shape(wm)) j["host_watermark_ssim"] = ssim(all, wm);
  write_json(dir / "report.json", j);
  log << "stego-embed: |R2| " << mask.r2_count() << ", capacity " << capacity(mask) << ", host " << summary(rall)
      << " (R1 only " << summary(rr1) << ")\n";
}

void run_stego_extract(const ExperimentConfig& cfg, std::ostream& log) {
  if (cfg.plan_path.empty() || cfg.measurements_path.empty() || cfg.mapping_path.empty()) {
    throw InvalidArgument("stego-extract needs --plan, --measurements and --mapping");
  }
  const AcquisitionPlan plan = load_plan(cfg.plan_path);
  const MeasurementSequence seq = load_measurements(cfg.measurements_path);
  FrequencyMapping mapping = load_mapping(cfg.mapping_path);
  if (cfg.key_seed && mapping.key_seed != cfg.key_seed) {
    const auto freqs = default_watermark_freqs(mapping.watermark_width, mapping.watermark_height,
                                               mapping.entries.size() / 4);
    FrequencyMapping rekeyed = build_mapping(mapping.mask(), freqs, mapping.watermark_width,
                                             mapping.watermark_height, cfg.key_seed);
    rekeyed.normalization = mapping.normalization;
    mapping = std::move(rekeyed);
  }
  const auto weights = extract_weights(seq, mapping, plan);
  const SpectrumGrid spec = extract_watermark(seq, mapping, plan);
  const Image wm = reconstruct(complete_symmetry(spec));

  const fs::path dir = prepare_out(cfg);
  std::string table = "# extracted watermark weights\nslot,weight\n";
  for (std::size_t i = 0; i < weights.size(); ++i) table += std::to_string(i) + "," + fmt(weights[i]) + "\n";
  write_text_file(dir / "weights.csv", table);
  write_display_pgm(dir / "watermark.pgm", wm);
  write_matrix_csv(dir / "watermark.csv", scaled(wm, 1.0 / fourier_gain(plan)), "extracted watermark");
  if (!cfg.reference_path.empty()) {
    const MetricReport report = compare(read_gray(cfg.reference_path), wm, cfg.reference_path.string(), "watermark");
    write_json(dir / "report.json", to_json(report));
    log << "stego-extract: " << weights.size() << " slots, " << summary(report) << "\n";
  } else {
    log << "stego-extract: " << weights.size() << " slots\n";
  }
}

void run_color_embed(const ExperimentConfig& cfg, std::ostream& log) {
  const ColorImage scene = load_color_scene(cfg.scene, cfg.size, cfg.scene_seed);
  const std::size_t n = cfg.size.value_or(scene.width());
  const ColorImage wm = load_color_scene(
      cfg.watermark, cfg.watermark.starts_with("synth:") ? std::optional<std::size_t>(n) : cfg.size, cfg.watermark_seed);
  if (cfg.channel_dc.size() != 3) throw InvalidArgument("color embedding needs three DC offsets (r,g,b)");
  const AcquisitionPlan plan = plan_of(cfg, scene.channels[0]);
  const ColorImage fused =
      embed_color(scene, wm, plan, {cfg.channel_dc[0], cfg.channel_dc[1], cfg.channel_dc[2]}, noise_of(cfg));

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& c : fused.channels) {
    const auto [mn, mx] = std::minmax_element(c.values().begin(), c.values().end());
    lo = std::min(lo, *mn);
    hi = std::max(hi, *mx);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  ColorImage display;
  for (std::size_t c = 0; c < 3; ++c) display.channels[c] = scaled(offset(fused.channels[c], -lo), 1.0 / span);

  const fs::path dir = prepare_out(cfg);
  write_ppm(dir / "fused.ppm", display);
  static constexpr std::array<const char*, 3> kNames = {"r", "g", "b"};
  for (std::size_t c = 0; c < 3; ++c) {
    write_display_pgm(dir / (std::string("fused_") + kNames[c] + ".pgm"), fused.channels[c]);
  }
  log << "color-embed: " << plan.size() << " patterns per channel, dc " << fmt(cfg.channel_dc[0]) << ","
      << fmt(cfg.channel_dc[1]) << "," << fmt(cfg.channel_dc[2]) << "\n";
}

void run_sweep_noise(const ExperimentConfig& cfg, std::ostream& log) {
  if (cfg.snr_sweep.empty()) throw InvalidArgument("sweep-noise needs a nonempty SNR list");
  if (cfg.repetitions == 0) throw InvalidArgument("sweep-noise needs at least one repetition");
  const Image scene = load_scene(cfg.scene, cfg.size, cfg.scene_seed);
  const Image wm = load_watermark(cfg, scene);
  const double dc = cfg.dc_offsets.empty() ? 0.0 : cfg.dc_offsets.front();
  const std::size_t reps = cfg.repetitions;
  std::vector<Curve> curves;

  // Each (snr, repetition) job is independent and seeded by noise_seed + repetition.
  auto for_each_job = [&](auto&& job) {
    for (double snr : cfg.snr_sweep) {
      for (std::size_t k = 0; k < reps; ++k) job(snr, cfg.noise_seed + k);
    }
  };

  if (cfg.pipeline == "watermark" || cfg.pipeline == "dewatermark") {
    const AcquisitionPlan plan = plan_of(cfg, scene);
    const TVSignal tv = shaped_tv(cfg, wm, plan, dc);
    const MeasurementSequence clean = measure(scene, plan, tv);
    const bool fused = cfg.pipeline == "watermark";
    const Image reference = fused ? reconstruct_image(clean, plan) : reconstruct_image(measure(scene, plan), plan);
    const MetricRange range = range_for(cfg, reference);
    Curve c{fused ? "fused" : "dewatermarked", {}};
    for_each_job([&](double snr, std::uint64_t seed) {
      const MeasurementSequence noisy = apply_noise(clean, NoiseModel::gaussian(snr, seed));
      const Image out = fused ? reconstruct_image(noisy, plan) : reconstruct_image(divide_dewatermark(noisy, tv), plan);
      const MetricReport r = compare(reference, out, "reference", c.target, range);
      c.rows.push_back({snr, static_cast<double>(seed), r.psnr_db, r.ssim});
    });
    curves.push_back(std::move(c));
  } else if (cfg.pipeline == "stego") {
    const AcquisitionPlan plan =
        build_plan(PatternMode::FourStepSinusoid, scene.width(), scene.height(), Sampling::full());
    const FrequencyMask mask = build_mask(scene.width(), scene.height(), cfg.r1_side);
    FrequencyMapping mapping = build_mapping(mask, default_watermark_freqs(wm.width(), wm.height(), capacity(mask)),
                                             wm.width(), wm.height(), cfg.key_seed);
    const TVSignal tv = stego_weights(wm, mapping, plan);
    mapping.normalization = tv.normalization;
    const MeasurementSequence clean = measure(scene, plan, tv);
    const MetricRange host_range = range_for(cfg, scene);
    const MetricRange mark_range = range_for(cfg, wm);
    Curve host{"host", {}};
    Curve mark{"watermark", {}};
    for_each_job([&](double snr, std::uint64_t seed) {
      const MeasurementSequence noisy = apply_noise(clean, NoiseModel::gaussian(snr, seed));
      const MetricReport rh =
          compare(scene, stego_host_reconstruct(noisy, plan, mask, HostRegions::AllRegions), "scene", "host", host_range);
      const MetricReport rw =
          compare(wm, reconstruct(complete_symmetry(extract_watermark(noisy, mapping, plan))), "watermark", "extracted",
                  mark_range);
      host.rows.push_back({snr, static_cast<double>(seed), rh.psnr_db, rh.ssim});
      mark.rows.push_back({snr, static_cast<double>(seed), rw.psnr_db, rw.ssim});
    });
    curves.push_back(std::move(host));
    curves.push_back(std::move(mark));
  } else {
    throw InvalidArgument("unknown pipeline '" + cfg.pipeline + "' (expected watermark, dewatermark or stego)");
  }

  const fs::path dir = prepare_out(cfg);
  const std::string header = "sweep-noise pipeline=" + cfg.pipeline + " scene=" + cfg.scene +
                             " watermark=" + cfg.watermark + " dc_offset=" + fmt(dc) + " range=" + cfg.metric_range;
  for (const auto& c : curves) {
    write_curve(dir, c, cfg.snr_sweep, reps, header);
    log << "sweep-noise: " << c.target << " " << c.rows.size() << " runs\n";
  }
}

void run_sweep_sampling(const ExperimentConfig& cfg, std::ostream& log) {
  if (cfg.fractions.empty()) throw InvalidArgument("sweep-sampling needs a nonempty fraction list");
  const Image scene = load_scene(cfg.scene, cfg.size, cfg.scene_seed);
  const Image wm = load_watermark(cfg, scene);
  const double dc = cfg.dc_offsets.empty() ? 0.0 : cfg.dc_offsets.front();
  const PatternMode mode = parse_pattern_mode(cfg.mode);
  const AcquisitionPlan full = build_plan(mode, scene.width(), scene.height(), Sampling::full());
  const Image reference = embed(scene, wm, full, dc).fused;
  const MetricRange range = range_for(cfg, reference);
  const fs::path dir = prepare_out(cfg);

  std::string stem;
  if (cfg.sweep_kind == "sampling") {
    stem = "sampling";
  } else if (cfg.sweep_kind == "tv-length") {
    stem = "tv_length";
  } else {
    throw InvalidArgument("unknown sweep kind '" + cfg.sweep_kind + "' (expected sampling or tv-length)");
  }
  std::string table = "# sweep-sampling kind=" + cfg.sweep_kind + " scene=" + cfg.scene + " watermark=" +
                      cfg.watermark + " dc_offset=" + fmt(dc) + " range=" + cfg.metric_range + "\nfraction,psnr_db,ssim\n";
  for (std::size_t i = 0; i < cfg.fractions.size(); ++i) {
    const double p = cfg.fractions[i];
    Image fused;
    if (stem == "sampling") {
      const AcquisitionPlan plan = build_plan(mode, scene.width(), scene.height(), Sampling::low_frequency(p));
      fused = embed_with_tv(scene, watermark_tv(wm, plan, dc), plan, noise_of(cfg)).fused;
    } else {
      fused = embed_with_tv(scene, shorten_tv(watermark_tv(wm, full, dc), full, p), full, noise_of(cfg)).fused;
    }
    const MetricReport r = compare(reference, fused, "full", indexed("fused", i, ""), range);
    table += fmt(p) + "," + fmt(r.psnr_db) + "," + fmt(r.ssim) + "\n";
    write_display_pgm(dir / indexed("fused", i, ".pgm"), fused);
  }
  write_text_file(dir / (stem + ".csv"), table);
  log << "sweep-sampling: " << cfg.fractions.size() << " fractions written to " << (dir / (stem + ".csv")).string()
      << "\n";
}

}  // namespace fspi::cli
