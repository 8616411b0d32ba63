#include <doctest.h>

#include <cmath>
#include <set>

#include "fspi/error.hpp"
#include "fspi/metrics.hpp"
#include "fspi/scenes.hpp"
#include "fspi/stego.hpp"
#include "oracles.hpp"

using namespace fspi;

TEST_SUITE("stego") {
  TEST_CASE("mask geometry") {
    const auto mask = build_mask(100, 100, 60);
    CHECK(mask.r1_count() == 3600);
    CHECK(mask.r2_count() == 6400);
    CHECK(capacity(mask) == 1600);
    CHECK(mask.in_r1({0, 0}));
    CHECK(mask.in_r1({29, 0}));
    CHECK(mask.in_r1({70, 70}));
    CHECK_FALSE(mask.in_r1({30, 0}));
    CHECK(mask.r2_frequencies().size() == 6400);
    const auto odd = build_mask(9, 9, 3);
    for (std::size_t v = 0; v < 9; ++v) {
      for (std::size_t u = 0; u < 9; ++u) {
        CHECK(odd.in_r1({u, v}) == odd.in_r1(conjugate({u, v}, 9, 9)));
      }
    }
    CHECK_THROWS_AS(build_mask(10, 10, 0), InvalidArgument);
    CHECK_THROWS_AS(build_mask(10, 10, 11), InvalidArgument);
  }

  TEST_CASE("mapping uses each group and slot once") {
    const auto mask = build_mask(12, 12, 6);
    const auto freqs = default_watermark_freqs(8, 8, capacity(mask));
    for (std::optional<std::uint64_t> key : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{5}}) {
      const auto m = build_mapping(mask, freqs, 8, 8, key);
      CHECK_NOTHROW(m.validate());
      CHECK(m.entries.size() == 4 * freqs.size());
      std::set<Frequency> hosts;
      for (const auto& e : m.entries) {
        CHECK_FALSE(mask.in_r1(e.host));
        CHECK(hosts.insert(e.host).second);
      }
    }
    auto m = build_mapping(mask, freqs, 8, 8, 5);
    m.entries[1].host = m.entries[0].host;
    CHECK_THROWS_AS(m.validate(), InvalidArgument);
    CHECK_THROWS_AS(build_mapping(mask, default_watermark_freqs(8, 8, capacity(mask) + 1), 8, 8), InvalidArgument);
  }

  TEST_CASE("extraction recovers the embedded weights exactly") {
    const std::size_t n = 20;
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const auto mask = build_mask(n, n, 9);
    const Image host = oracle::random_image(n, n, 80);
    const Image wm = oracle::random_image(n, n, 81);
    auto mapping = build_mapping(mask, default_watermark_freqs(n, n, capacity(mask)), n, n, 17);
    const TVSignal tv = stego_weights(wm, mapping, plan);
    mapping.normalization = tv.normalization;
    double norm = 0.0;
    const auto embedded = stego_coefficients(wm, mapping, plan.params, &norm);
    CHECK(norm == tv.normalization);
    const auto seq = measure(host, plan, tv);
    CHECK(k1_from_sequence(seq, plan, mask) == doctest::Approx(k1(host, plan.params)).epsilon(1e-12));
    const auto got = extract_weights(seq, mapping, plan);
    CHECK(oracle::max_rel_error(got, embedded) < 1e-9);

    // Extracted coefficients equal 2b times the watermark DFT at the mapped frequencies.
    const auto spec = extract_watermark(seq, mapping, plan);
    const auto dft = oracle::direct_dft(wm);
    double worst = 0.0;
    for (const auto& e : mapping.entries) {
      const std::size_t i = spec.index(e.watermark);
      worst = std::max(worst, std::abs(spec.coeffs[i] - 255.0 * dft[i]) / std::abs(255.0 * dft[0]));
    }
    CHECK(worst < 1e-9);
  }

  TEST_CASE("host reconstruction from R1 only equals the masked host spectrum") {
    const std::size_t n = 15;
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const auto mask = build_mask(n, n, 7);
    const Image host = oracle::random_image(n, n, 82);
    const Image wm = oracle::random_image(n, n, 83);
    auto mapping = build_mapping(mask, default_watermark_freqs(n, n, capacity(mask)), n, n, 3);
    const TVSignal tv = stego_weights(wm, mapping, plan);
    const auto seq = measure(host, plan, tv);
    auto spec = assemble_spectrum(measure(host, plan), plan);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        if (!mask.in_r1({u, v})) spec.forget({u, v});
      }
    }
    CHECK(oracle::max_rel_error(stego_host_reconstruct(seq, plan, mask, HostRegions::R1Only), reconstruct(spec)) <
          1e-9);
  }

  TEST_CASE("wrong key scrambles the watermark") {
    const std::size_t n = 32;
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const auto mask = build_mask(n, n, 16);
    const Image host = make_scene("peppers", n, n);
    const Image wm = make_scene("blobs", n, n, 7);
    const auto freqs = default_watermark_freqs(n, n, capacity(mask));
    auto right = build_mapping(mask, freqs, n, n, 1);
    const TVSignal tv = stego_weights(wm, right, plan);
    right.normalization = tv.normalization;
    auto wrong = build_mapping(mask, freqs, n, n, 2);
    wrong.normalization = tv.normalization;
    const auto seq = measure(host, plan, tv);
    const double good = ssim(wm, reconstruct(complete_symmetry(extract_watermark(seq, right, plan))));
    const double bad = ssim(wm, reconstruct(complete_symmetry(extract_watermark(seq, wrong, plan))));
    CHECK(good > 0.9);
    CHECK(std::abs(bad) < 0.1);
  }
}
