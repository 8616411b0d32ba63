#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/app.hpp"
#include "fspi/dewatermark.hpp"
#include "fspi/error.hpp"
#include "fspi/io.hpp"
#include "fspi/metrics.hpp"
#include "fspi/recon.hpp"
#include "fspi/scenes.hpp"
#include "fspi/stego.hpp"
#include "fspi/watermark.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace fspi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string num(double v, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

fs::path workdir(int criterion) {
  const fs::path p = fs::current_path() / "acceptance_work" / ("criterion_" + std::to_string(criterion));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fspi");
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run(args, out, err) != 0) throw std::runtime_error("fspi " + args[1] + " failed: " + err.str());
}

using Table = std::map<std::string, std::vector<double>>;

Table read_table(const fs::path& csv) {
  std::istringstream in(read_text_file(csv));
  std::string line;
  std::vector<std::string> names;
  Table t;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream cells(line);
    std::string cell;
    if (names.empty()) {
      while (std::getline(cells, cell, ',')) names.push_back(cell);
      continue;
    }
    for (std::size_t k = 0; std::getline(cells, cell, ','); ++k) t[names.at(k)].push_back(std::stod(cell));
  }
  return t;
}

nlohmann::json read_json(const fs::path& path) { return nlohmann::json::parse(read_text_file(path)); }

double json_number(const nlohmann::json& j) {
  return j.is_string() ? std::stod(j.get<std::string>()) : j.get<double>();
}

// Index of the first entry that drops below its predecessor, or 0 when the curve never drops.
std::size_t first_drop(const std::vector<double>& y) {
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i] < y[i - 1]) return i;
  }
  return 0;
}

std::string curve(const std::vector<double>& x, const std::vector<double>& y) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? " " : "") + num(x[i], 3) + ":" + num(y[i]);
  return s;
}

MeasurementSequence as_sequence(const TVSignal& tv, const AcquisitionPlan& plan) {
  MeasurementSequence seq;
  seq.values = tv.weights;
  seq.plan_id = plan_id(plan);
  return seq;
}

std::vector<Image> test_images(std::size_t n) {
  std::vector<Image> out;
  for (std::uint64_t s = 0; s < 3; ++s) out.push_back(oracle::random_image(n, n, 500 + s));
  out.push_back(make_scene("peppers", n, n));
  out.push_back(make_scene("logo", n, n));
  return out;
}

Outcome criterion_1() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  double worst_phase = 0.0;
  std::size_t images = 0;
  for (std::size_t n : {16u, 64u}) {
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Image scene = oracle::random_image(n, n, 1000 * n + s);
      const auto spec = assemble_spectrum(measure(scene, plan), plan);
      const auto dft = oracle::direct_dft(scene);
      // Least-squares global constant between the two spectra.
      std::complex<double> num_c = 0.0;
      double den = 0.0;
      for (std::size_t i = 0; i < dft.size(); ++i) {
        num_c += std::conj(dft[i]) * spec.coeffs[i];
        den += std::norm(dft[i]);
      }
      const std::complex<double> c = num_c / den;
      std::vector<std::complex<double>> scaled(dft.size());
      for (std::size_t i = 0; i < dft.size(); ++i) scaled[i] = c * dft[i];
      worst = std::max(worst, oracle::max_rel_error(spec.coeffs, scaled));
      worst_phase = std::max(worst_phase, std::abs(std::arg(c)));
      ++images;
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(worst <= 1e-9, "max relative error " + num(worst, 3) + " over " + std::to_string(images) +
                               " images (16x16 and 64x64) <= 1e-9");
  o.require(elapsed < 10.0, "runtime " + num(elapsed, 3) + " s < 10 s");
  o.detail += "; constant phase " + num(worst_phase, 3);
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const std::size_t n = 24;
  const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
  const auto groups = plan.groups();
  const double a = plan.params.a;
  double pattern_err = 0.0;
  double k1_err = 0.0;
  double k2_err = 0.0;
  for (const auto& g : groups) {
    Image p[4];
    for (std::size_t k = 0; k < 4; ++k) p[plan.entries[g.first + k].phase_code] = plan_pattern(plan, g.first + k);
    for (std::size_t i = 0; i < p[0].size(); ++i) {
      pattern_err = std::max({pattern_err, std::abs(p[0].values()[i] + p[2].values()[i] - 2 * a) / (2 * a),
                              std::abs(p[1].values()[i] + p[3].values()[i] - 2 * a) / (2 * a)});
    }
  }
  std::size_t checked = 0;
  const auto scenes = test_images(n);
  for (std::size_t s = 0; s < scenes.size(); ++s) {
    const Image& scene = scenes[s];
    const Image& wm = scenes[(s + 1) % scenes.size()];
    double sum = 0.0;
    for (double v : scene.values()) sum += v;
    const double k1_want = 2 * a * sum;
    const auto seq = measure(scene, plan);
    for (double dc : {0.0, 0.7}) {
      const TVSignal tv = watermark_tv(wm, plan, dc);
      double wsum = 0.0;
      for (double v : wm.values()) wsum += v + dc;
      const double k2_want = 2 * a * wsum / tv.normalization;
      for (const auto& g : groups) {
        double i[4];
        double w[4];
        for (std::size_t k = 0; k < 4; ++k) {
          const int code = plan.entries[g.first + k].phase_code;
          i[code] = seq.values[g.first + k];
          w[code] = tv.weights[g.first + k];
        }
        k1_err = std::max({k1_err, std::abs(i[0] + i[2] - k1_want) / k1_want, std::abs(i[1] + i[3] - k1_want) / k1_want});
        k2_err = std::max({k2_err, std::abs(w[0] + w[2] - k2_want) / k2_want, std::abs(w[1] + w[3] - k2_want) / k2_want});
        ++checked;
      }
    }
  }
  o.require(pattern_err <= 1e-9, "P0+Ppi = Ppi/2+P3pi/2 = 2a, error " + num(pattern_err, 3));
  o.require(k1_err <= 1e-9, "I0+Ipi = Ipi/2+I3pi/2 = 2a sum R, error " + num(k1_err, 3));
  o.require(k2_err <= 1e-9, "W0+Wpi = Wpi/2+W3pi/2 = 2a sum R_W, error " + num(k2_err, 3));
  o.detail += "; " + std::to_string(checked) + " groups";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const double gain = 255.0;
  double freq_err = 0.0;
  double pixel_err = 0.0;
  std::size_t triples = 0;
  struct Triple {
    std::size_t n;
    std::string scene;
    std::string wm;
    double dc;
  };
  const std::vector<Triple> cases = {{16, "peppers", "logo", 0.0},  {16, "blobs", "chart", 0.3},
                                     {24, "texture", "logo", 0.0},  {24, "peppers", "blobs", 1.0},
                                     {32, "chart", "texture", 0.5}, {32, "peppers", "logo", 2.0}};
  for (const auto& c : cases) {
    const auto plan = build_plan(PatternMode::FourStepSinusoid, c.n, c.n, Sampling::full());
    const Image scene = make_scene(c.scene, c.n, c.n);
    const Image wm = make_scene(c.wm, c.n, c.n, 7);
    const EmbedResult r = embed(scene, wm, plan, c.dc);
    const auto fused = assemble_spectrum(r.measurements, plan);

    double sum = 0.0;
    for (double v : scene.values()) sum += v;
    const double k1_want = 2 * plan.params.a * sum;
    const Image rw = offset(wm, c.dc);
    double wsum = 0.0;
    for (double v : rw.values()) wsum += v;
    const double k2_want = 2 * plan.params.a * wsum / r.tv.normalization;

    const auto dft_r = oracle::direct_dft(scene);
    const auto dft_w = oracle::direct_dft(rw);
    std::vector<std::complex<double>> want(dft_r.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      want[i] = 0.5 * (k2_want * gain * dft_r[i] + k1_want * gain * dft_w[i] / r.tv.normalization);
    }
    freq_err = std::max(freq_err, oracle::max_rel_error(fused.coeffs, want));

    Image pixels(c.n, c.n);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      pixels.values()[i] = gain * (0.5 * k2_want * scene.values()[i] + 0.5 * k1_want * rw.values()[i] / r.tv.normalization);
    }
    pixel_err = std::max(pixel_err, oracle::max_rel_error(r.fused, pixels));

    const auto c_host = assemble_spectrum(measure(scene, plan), plan);
    const auto c_wm = assemble_spectrum(as_sequence(r.tv, plan), plan);
    std::vector<std::complex<double>> law(c_host.coeffs.size());
    for (std::size_t i = 0; i < law.size(); ++i) law[i] = 0.5 * (r.tv.k2 * c_host.coeffs[i] + r.k1 * c_wm.coeffs[i]);
    freq_err = std::max(freq_err, oracle::max_rel_error(fused.coeffs, law));
    ++triples;
  }
  o.require(freq_err <= 1e-6, "C' = (K2 C + K1 C_W)/2 per frequency, error " + num(freq_err, 3));
  o.require(pixel_err <= 1e-6, "R' = (K2/2) R + (K1/2) R_W per pixel, error " + num(pixel_err, 3));
  o.require(triples >= 5, std::to_string(triples) + " triples including dc = 0");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  double worst = 0.0;
  double worst_wrong = -1.0;
  std::size_t runs = 0;
  std::size_t wrong_runs = 0;
  for (std::size_t n : {20u, 64u, 100u}) {
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const auto mask = build_mask(n, n, n * 6 / 10);
    const Image wm = make_scene("texture", n, n, 7);
    const auto freqs = default_watermark_freqs(n, n, capacity(mask));
    auto mapping = build_mapping(mask, freqs, n, n, 42);
    const TVSignal tv = stego_weights(wm, mapping, plan);
    mapping.normalization = tv.normalization;
    const auto embedded = stego_coefficients(wm, mapping, plan.params);
    for (const Image& host : {make_scene("peppers", n, n), oracle::random_image(n, n, 900 + n)}) {
      const auto seq = measure(host, plan, tv);
      worst = std::max(worst, oracle::max_rel_error(extract_weights(seq, mapping, plan), embedded));
      ++runs;
      // Wrong keys are checked from 64x64 up.
      if (n < 64) continue;
      for (std::uint64_t key = 43; key < 48; ++key) {
        auto wrong = build_mapping(mask, freqs, n, n, key);
        wrong.normalization = mapping.normalization;
        const Image guess = reconstruct(complete_symmetry(extract_watermark(seq, wrong, plan)));
        worst_wrong = std::max(worst_wrong, ssim(wm, guess));
        ++wrong_runs;
      }
    }
  }
  o.require(worst <= 1e-9, "extracted weights error " + num(worst, 3) + " <= 1e-9 over " + std::to_string(runs) +
                               " runs (20x20 to 100x100)");
  o.require(worst_wrong < 0.1, "largest wrong-key watermark SSIM " + num(worst_wrong) + " < 0.1 over " +
                                   std::to_string(wrong_runs) + " keyed runs (64x64 and 100x100)");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  double divide_err = 0.0;
  double filter_err = 0.0;
  for (std::size_t n : {16u, 32u}) {
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const Image scene = make_scene("peppers", n, n);
    const Image wm = make_scene("logo", n, n);
    const Image host = reconstruct_image(measure(scene, plan), plan);
    for (double dc : {0.0, 0.5}) {
      const EmbedResult r = embed(scene, wm, plan, dc);
      const Image back = reconstruct_image(divide_dewatermark(r.measurements, r.tv), plan);
      divide_err = std::max(divide_err, oracle::max_rel_error(back, host));

      const TVSignal full = watermark_tv(wm, plan, dc);
      const auto host_spec = assemble_spectrum(measure(scene, plan), plan);
      for (const FilterRegion& region : {FilterRegion::half_u(n, n), FilterRegion::low_frequency(n, n, 0.3)}) {
        const TVSignal tv = confine_tv(full, plan, region.erase);
        const EmbedResult c = embed_with_tv(scene, tv, plan);
        const Image got = filter_reconstruct(assemble_spectrum(c.measurements, plan), region);
        const Image want = scaled(filter_reconstruct(host_spec, region), tv.k2 / 2.0);
        filter_err = std::max(filter_err, oracle::max_rel_error(got, want));
      }
    }
  }
  o.require(divide_err <= 1e-9, "division recovers the host, error " + num(divide_err, 3));
  o.require(filter_err <= 1e-9, "half-u and low-frequency filters leave no residual, error " + num(filter_err, 3));
  return o;
}

Outcome criterion_6() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t n : {15u, 16u, 64u}) {
    const auto full = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const auto half = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::half_spectrum());
    for (const Image& scene : test_images(n)) {
      const Image a = reconstruct_image(measure(scene, full), full);
      const Image b = reconstruct_image(measure(scene, half), half);
      worst = std::max(worst, oracle::max_rel_error(b, a));
    }
  }
  const auto full64 = build_plan(PatternMode::FourStepSinusoid, 64, 64, Sampling::full());
  const auto half64 = build_plan(PatternMode::FourStepSinusoid, 64, 64, Sampling::half_spectrum());
  o.require(worst <= 1e-9, "half-spectrum equals full sampling, error " + num(worst, 3));
  o.require(full64.size() == 16384 && half64.size() == 8192,
            "plan sizes " + std::to_string(full64.size()) + " and " + std::to_string(half64.size()) + " at 64x64");
  return o;
}

std::vector<std::string> noise_args(const fs::path& dir, const std::string& pipeline) {
  return {"sweep-noise", "--size", "64", "--scene", "synth:peppers", "--watermark", "synth:logo", "--dc", "0",
          "--pipeline", pipeline, "--snrs", "10:5:40", "--repetitions", "10", "-o", dir.string()};
}

Outcome criterion_7() {
  Outcome o;
  const fs::path dir = workdir(7);
  cli(noise_args(dir, "watermark"));
  const Table t = read_table(dir / "fused_curve.csv");
  const auto& snr = t.at("snr_db");
  const std::size_t at30 = std::find(snr.begin(), snr.end(), 30.0) - snr.begin();
  const double p = t.at("psnr_mean").at(at30);
  const double s = t.at("ssim_mean").at(at30);
  o.require(p >= 30.0, "PSNR at 30 dB " + num(p) + " >= 30");
  o.require(s >= 0.8, "SSIM at 30 dB " + num(s) + " >= 0.8");
  o.require(first_drop(t.at("psnr_mean")) == 0, "PSNR nondecreasing [" + curve(snr, t.at("psnr_mean")) + "]");
  o.require(first_drop(t.at("ssim_mean")) == 0, "SSIM nondecreasing [" + curve(snr, t.at("ssim_mean")) + "]");
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const fs::path dir = workdir(8);
  cli(noise_args(dir, "dewatermark"));
  const Table t = read_table(dir / "dewatermarked_curve.csv");
  const auto& snr = t.at("snr_db");
  const std::size_t at30 = std::find(snr.begin(), snr.end(), 30.0) - snr.begin();
  const double p = t.at("psnr_mean").at(at30);
  const double s = t.at("ssim_mean").at(at30);
  o.require(std::abs(p - 20.0) <= 3.0, "PSNR at 30 dB " + num(p) + " in 20 +- 3");
  o.require(std::abs(s - 0.7) <= 0.1, "SSIM at 30 dB " + num(s) + " in 0.7 +- 0.1");
  return o;
}

const std::vector<std::string> kStego = {"--size", "100", "--watermark", "synth:texture", "--watermark-seed", "7",
                                         "--r1-side", "60", "--key-seed", "42"};

Outcome criterion_9() {
  Outcome o;
  const fs::path dir = workdir(9);
  const fs::path ref = dir / "watermark_reference.pgm";
  write_pgm(ref, make_scene("texture", 100, 100, 7), PnmEncoding::Binary, 65535);
  const auto t0 = Clock::now();
  auto args = kStego;
  args.insert(args.begin(), "stego-embed");
  args.insert(args.end(), {"--scene", "synth:peppers", "-o", (dir / "embed").string()});
  cli(args);
  cli({"stego-extract", "--plan", (dir / "embed" / "plan.txt").string(), "--measurements",
       (dir / "embed" / "measurements.csv").string(), "--mapping", (dir / "embed" / "mapping.csv").string(),
       "--reference", ref.string(), "-o", (dir / "extract").string()});
  const double elapsed = seconds_since(t0);
  const auto host = read_json(dir / "embed" / "report.json");
  const auto wm = read_json(dir / "extract" / "report.json");
  const double hp = json_number(host["host_all"]["psnr_db"]);
  const double hs = json_number(host["host_all"]["ssim"]);
  const double wp = json_number(wm["psnr_db"]);
  const double ws = json_number(wm["ssim"]);
  const double cross = json_number(host["host_watermark_ssim"]);
  o.require(host["r2_count"].get<std::size_t>() == 6400 && host["capacity"].get<std::size_t>() == 1600,
            "|R2| 6400, capacity 1600");
  o.require(hp >= 32.0, "host PSNR " + num(hp) + " >= 32");
  o.require(hs >= 0.95, "host SSIM " + num(hs) + " >= 0.95");
  o.require(std::abs(wp - 20.0) <= 3.0, "watermark PSNR " + num(wp) + " in 20 +- 3");
  o.require(std::abs(ws - 0.65) <= 0.1, "watermark SSIM " + num(ws) + " in 0.65 +- 0.1");
  o.require(std::abs(cross) < 0.05, "|SSIM(host, watermark)| " + num(std::abs(cross)) + " < 0.05");
  o.require(elapsed < 60.0, "runtime " + num(elapsed, 3) + " s < 60 s");
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const fs::path dir = workdir(10);
  std::size_t wins = 0;
  std::string rows;
  const std::vector<std::pair<std::string, std::string>> scenes = {
      {"synth:peppers", "1"}, {"synth:peppers", "2"}, {"synth:texture", "3"}, {"synth:blobs", "4"}};
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    const fs::path out = dir / std::to_string(i);
    auto args = kStego;
    args.insert(args.begin(), "stego-embed");
    args.insert(args.end(), {"--scene", scenes[i].first, "--scene-seed", scenes[i].second, "-o", out.string()});
    cli(args);
    const auto r = read_json(out / "report.json");
    const double all = json_number(r["host_all"]["psnr_db"]);
    const double r1 = json_number(r["host_r1"]["psnr_db"]);
    wins += all > r1;
    rows += (i ? ", " : "") + scenes[i].first.substr(6) + "/" + scenes[i].second + " " + num(all) + " vs " + num(r1);
  }
  o.require(wins >= 3, "AllRegions PSNR above R1Only on " + std::to_string(wins) + " of 4 images [" + rows + "]");
  return o;
}

Outcome criterion_11() {
  Outcome o;
  const fs::path dir = workdir(11);
  auto args = kStego;
  args.insert(args.begin(), "sweep-noise");
  args.insert(args.end(), {"--scene", "synth:peppers", "--pipeline", "stego", "--snrs", "0:5:35", "--repetitions",
                           "10", "-o", dir.string()});
  cli(args);
  const Table host = read_table(dir / "host_curve.csv");
  const Table wm = read_table(dir / "watermark_curve.csv");
  const auto& snr = host.at("snr_db");
  const auto& hs = host.at("ssim_mean");
  const auto& ws = wm.at("ssim_mean");
  bool above = true;
  for (std::size_t i = 0; i < snr.size(); ++i) above = above && ws[i] >= hs[i];
  o.require(above, "watermark SSIM >= host SSIM at every SNR [watermark " + curve(snr, ws) + "; host " +
                       curve(snr, hs) + "]");
  o.require(ws.front() >= 0.3, "watermark SSIM at 0 dB " + num(ws.front()) + " >= 0.3");
  o.require(hs.front() <= 0.1, "host SSIM at 0 dB " + num(hs.front()) + " <= 0.1");
  return o;
}

Outcome criterion_12() {
  Outcome o;
  const fs::path dir = workdir(12);
  for (const std::string kind : {"sampling", "tv-length"}) {
    const fs::path out = dir / kind;
    cli({"sweep-sampling", "--size", "64", "--scene", "synth:peppers", "--watermark", "synth:logo", "--kind", kind,
         "--fractions", "0.05,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1", "-o", out.string()});
    const fs::path csv = out / (kind == "sampling" ? "sampling.csv" : "tv_length.csv");
    const Table t = read_table(csv);
    const auto& y = t.at("ssim");
    const std::size_t drop = first_drop(y);
    o.require(drop == 0, kind + " SSIM nondecreasing in " + csv.filename().string() + " [" +
                             curve(t.at("fraction"), y) + "]");
  }
  return o;
}

Outcome criterion_13() {
  Outcome o;
  const std::size_t n = 32;
  const Image scene = make_scene("peppers", n, n);
  const Image wm = make_scene("logo", n, n);
  for (PatternMode mode : {PatternMode::Random, PatternMode::SinusoidOrthogonal, PatternMode::HadamardDiff}) {
    const auto plan = build_plan(mode, n, n, Sampling::full(), {.seed = 3});
    const EmbedResult r = embed(scene, wm, plan, 0.0);
    const double fused = correlation(r.fused, predicted_fusion(scene, r.tv, plan));
    const double best_input = std::max(correlation(r.fused, scene), correlation(r.fused, wm));
    o.require(fused > best_input, std::string(to_string(mode)) + " " + num(fused) + " > " + num(best_input));
  }
  return o;
}

const std::vector<std::function<Outcome()>> kCriteria = {
    criterion_1, criterion_2, criterion_3,  criterion_4,  criterion_5,  criterion_6, criterion_7,
    criterion_8, criterion_9, criterion_10, criterion_11, criterion_12, criterion_13};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> chosen;
  for (int i = 1; i < argc; ++i) chosen.push_back(std::stoul(argv[i]));
  if (chosen.empty()) {
    for (std::size_t k = 1; k <= kCriteria.size(); ++k) chosen.push_back(k);
  }
  bool all = true;
  for (std::size_t k : chosen) {
    if (k < 1 || k > kCriteria.size()) {
      std::cerr << "error: usage: no criterion " << k << "\n";
      return 2;
    }
    Outcome r;
    try {
      r = kCriteria[k - 1]();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    all = all && r.pass;
    std::cout << "criterion " << k << ": " << (r.pass ? "PASS" : "FAIL") << " " << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
