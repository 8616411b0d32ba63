#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "fspi/io.hpp"
#include "fspi/recon.hpp"
#include "fspi/scenes.hpp"
#include "fspi/serialize.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using fspi::Image;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result fspi_run(std::vector<std::string> args) {
  args.insert(args.begin(), "fspi");
  std::ostringstream out;
  std::ostringstream err;
  const int code = fspi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh(const std::string& name) {
  const fs::path p = fs::current_path() / "cli_work" / name;
  fs::remove_all(p);
  return p;
}

std::size_t data_rows(const fs::path& csv) {
  std::istringstream in(fspi::read_text_file(csv));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) n += !line.empty() && line[0] != '#';
  return n;
}

std::vector<double> column(const fs::path& csv, std::size_t col) {
  std::istringstream in(fspi::read_text_file(csv));
  std::string line;
  std::vector<double> out;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::size_t start = 0;
    for (std::size_t k = 0; k < col; ++k) start = line.find(',', start) + 1;
    out.push_back(std::stod(line.substr(start, line.find(',', start) - start)));
  }
  return out;
}

}  // namespace

TEST_CASE("acquire writes every artifact and half sampling has 8192 readings at 64x64") {
  const fs::path dir = fresh("acquire_half");
  const auto r = fspi_run({"acquire", "--size", "64", "--sampling", "half", "-o", dir.string()});
  REQUIRE(r.code == 0);
  for (const char* f : {"plan.txt", "measurements.csv", "spectrum.csv", "spectrum.ppm", "recon.pgm", "recon.csv",
                        "report.json"}) {
    CHECK(fs::exists(dir / f));
  }
  CHECK(data_rows(dir / "measurements.csv") == 8192 + 1);
}

TEST_CASE("acquire then reconstruct reproduces the scene") {
  const fs::path dir = fresh("acquire_roundtrip");
  const fs::path scene = dir.parent_path() / "scene.pgm";
  fs::create_directories(dir.parent_path());
  fspi::write_pgm(scene, fspi::make_scene("peppers", 24, 24), fspi::PnmEncoding::Ascii, 65535);
  REQUIRE(fspi_run({"acquire", "--scene", scene.string(), "-o", dir.string()}).code == 0);
  const Image back = fspi::read_matrix_csv(dir / "recon.csv");
  CHECK(oracle::max_rel_error(back, fspi::read_gray(scene)) < 1e-6);
}

TEST_CASE("embed with a DC sweep writes one fused image per offset") {
  const fs::path dir = fresh("embed_sweep");
  const auto r = fspi_run({"embed", "--size", "32", "--dc", "0,0.5,1", "-o", dir.string()});
  REQUIRE(r.code == 0);
  for (int i = 0; i < 3; ++i) {
    CHECK(fs::exists(dir / ("fused_" + std::to_string(i) + ".pgm")));
    CHECK(fs::exists(dir / ("tv_" + std::to_string(i) + ".csv")));
  }
  const auto q = column(dir / "summary.csv", 4);
  REQUIRE(q.size() == 3);
  CHECK(q[0] > q[1]);
  CHECK(q[1] > q[2]);
  for (double ssim : column(dir / "summary.csv", 7)) CHECK(ssim > 0.999999);
}

TEST_CASE("acquisitions compose with divide de-watermarking") {
  const fs::path emb = fresh("compose_embed");
  REQUIRE(fspi_run({"embed", "--size", "16", "--dc", "0.5", "-o", emb.string()}).code == 0);
  const fs::path acq = fresh("compose_acquire");
  REQUIRE(fspi_run({"acquire", "--size", "16", "-o", acq.string()}).code == 0);
  const fs::path dw = fresh("compose_dewatermark");
  const auto r = fspi_run({"dewatermark", "--plan", (emb / "plan.txt").string(), "--measurements",
                           (emb / "measurements_0.csv").string(), "--tv", (emb / "tv_0.csv").string(), "-o",
                           dw.string()});
  REQUIRE(r.code == 0);
  CHECK(oracle::max_rel_error(fspi::read_matrix_csv(dw / "dewatermarked.csv"),
                              fspi::read_matrix_csv(acq / "recon.csv")) < 1e-9);
}

TEST_CASE("half-u filter leaves no watermark residual") {
  const fs::path emb = fresh("halfu_embed");
  REQUIRE(fspi_run({"embed", "--size", "32", "--watermark-region", "half-u", "-o", emb.string()}).code == 0);
  const fs::path acq = fresh("halfu_acquire");
  REQUIRE(fspi_run({"acquire", "--size", "32", "-o", acq.string()}).code == 0);
  for (const std::string& filter : std::vector<std::string>{"half-u", "custom:" + (emb / "region.txt").string()}) {
    const fs::path dw = fresh("halfu_filter");
    REQUIRE(fspi_run({"dewatermark", "--method", "filter", "--filter", filter, "--plan", (emb / "plan.txt").string(),
                      "--measurements", (emb / "measurements_0.csv").string(), "-o", dw.string()})
                .code == 0);
    const Image out = fspi::read_matrix_csv(dw / "dewatermarked.csv");
    const Image host = fspi::read_matrix_csv(acq / "recon.csv");
    const fspi::TVSignal tv = fspi::load_tv(emb / "tv_0.csv");
    CHECK(oracle::max_rel_error(out, fspi::scaled(host, tv.k2 / 2.0)) < 1e-9);
  }
}

TEST_CASE("stego round trip recovers the embedded weights and a wrong key does not") {
  const fs::path emb = fresh("stego_embed");
  REQUIRE(fspi_run({"stego-embed", "--size", "40", "--r1-side", "20", "--key-seed", "5", "--watermark",
                    "synth:blobs", "-o", emb.string()})
              .code == 0);
  const fs::path ex = fresh("stego_extract");
  const std::vector<std::string> base = {"stego-extract", "--plan", (emb / "plan.txt").string(), "--measurements",
                                         (emb / "measurements.csv").string(), "--mapping",
                                         (emb / "mapping.csv").string()};
  auto args = base;
  args.insert(args.end(), {"-o", ex.string()});
  REQUIRE(fspi_run(args).code == 0);
  const auto got = column(ex / "weights.csv", 1);
  const auto want = column(emb / "embedded_weights.csv", 1);
  REQUIRE(got.size() == want.size());
  CHECK(oracle::max_rel_error(got, want) < 1e-9);

  const fs::path wrong = fresh("stego_wrong");
  args = base;
  args.insert(args.end(), {"--key-seed", "6", "-o", wrong.string()});
  REQUIRE(fspi_run(args).code == 0);
  CHECK(oracle::max_rel_error(column(wrong / "weights.csv", 1), want) > 0.1);
}

TEST_CASE("color embedding writes the composite") {
  const fs::path dir = fresh("color");
  REQUIRE(fspi_run({"color-embed", "--size", "16", "--channel-dc", "0,0.2,0.4", "-o", dir.string()}).code == 0);
  CHECK(fspi::read_color(dir / "fused.ppm").width() == 16);
  CHECK(fs::exists(dir / "fused_g.pgm"));
}

TEST_CASE("sweeps are byte-identical across runs") {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"sweep-noise", "--size", "16", "--snrs", "0:10:30", "--repetitions", "2"},
           {"sweep-noise", "--size", "16", "--pipeline", "stego", "--r1-side", "8", "--snrs", "10,20",
            "--repetitions", "2"},
           {"sweep-sampling", "--size", "16", "--fractions", "0.25,0.5,1"},
           {"sweep-sampling", "--size", "16", "--kind", "tv-length", "--fractions", "0.25,0.5,1"}}) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = fresh("sweep_" + std::to_string(run));
      auto args = cmd;
      args.insert(args.end(), {"-o", dir.string()});
      REQUIRE(fspi_run(args).code == 0);
      std::string all;
      for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".csv") all += e.path().filename().string() + fspi::read_text_file(e.path());
      }
      if (run == 0) first = all;
      CHECK(all == first);
      CHECK_FALSE(all.empty());
    }
  }
}

TEST_CASE("noise sweep curve has one row per SNR") {
  const fs::path dir = fresh("noise_curve");
  REQUIRE(fspi_run({"sweep-noise", "--size", "16", "--pipeline", "dewatermark", "--snrs", "10,20,30",
                    "--repetitions", "3", "-o", dir.string()})
              .code == 0);
  CHECK(data_rows(dir / "dewatermarked_curve.csv") == 4);
  CHECK(data_rows(dir / "dewatermarked_rows.csv") == 10);
}

TEST_CASE("config files are read and options override them") {
  const fs::path dir = fresh("config");
  fs::create_directories(dir);
  const fs::path cfg = dir / "run.ini";
  fspi::write_text_file(cfg, "[embed]\nsize=16\ndc=0,0.5\nout=" + (dir / "from_file").string() + "\n");
  REQUIRE(fspi_run({"--config", cfg.string(), "embed"}).code == 0);
  CHECK(data_rows(dir / "from_file" / "summary.csv") == 3);
  REQUIRE(fspi_run({"--config", cfg.string(), "embed", "--dc", "1", "-o", (dir / "override").string()}).code == 0);
  CHECK(column(dir / "override" / "summary.csv", 1) == std::vector<double>{1.0});
}

TEST_CASE("errors are one machine-parsable line with a nonzero exit") {
  auto r = fspi_run({"acquire", "--scene", "/definitely/missing.pgm", "-o", fresh("err").string()});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: io_error: ", 0) == 0);
  CHECK(r.err.find("/definitely/missing.pgm") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);

  r = fspi_run({"acquire", "--mode", "laser", "-o", fresh("err").string()});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: parse_error: ", 0) == 0);

  r = fspi_run({"acquire", "--size", "6", "--mode", "hadamard", "-o", fresh("err").string()});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: invalid_argument: ", 0) == 0);

  r = fspi_run({"dewatermark", "--plan", "x"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: usage: ", 0) == 0);

  r = fspi_run({"embed", "--dc", "0,zz"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("the installed binary reports errors through its exit status") {
  const std::string cmd = std::string(FSPI_CLI_BINARY) + " acquire --sampling sideways -o " +
                          fresh("binary").string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(status != 0);
  const std::string ok = std::string(FSPI_CLI_BINARY) + " --help >/dev/null";
  CHECK(std::system(ok.c_str()) == 0);
}
