#include <doctest.h>

#include <cmath>

#include "fspi/dewatermark.hpp"
#include "fspi/error.hpp"
#include "fspi/watermark.hpp"
#include "oracles.hpp"

using namespace fspi;

TEST_SUITE("dewatermark") {
  TEST_CASE("division restores the unweighted readings") {
    const std::size_t n = 8;
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const Image scene = oracle::random_image(n, n, 70);
    const Image wm = oracle::random_image(n, n, 71);
    const TVSignal tv = watermark_tv(wm, plan, 0.5);
    const auto clean = measure(scene, plan);
    const auto back = divide_dewatermark(measure(scene, plan, tv), tv);
    CHECK(oracle::max_rel_error(back.values, clean.values) < 1e-12);
    CHECK(oracle::max_rel_error(reconstruct_image(back, plan), reconstruct_image(clean, plan)) < 1e-12);
  }

  TEST_CASE("zero weights are clamped to epsilon") {
    MeasurementSequence seq;
    seq.values = {2.0, 0.0, 3.0};
    TVSignal tv;
    tv.weights = {1.0, 0.0, 0.5};
    tv.k2 = 1.0;
    const auto out = divide_dewatermark(seq, tv, 0.25);
    CHECK(out.values == std::vector<double>{2.0, 0.0, 6.0});
    CHECK_THROWS_AS(divide_dewatermark(seq, tv, -1.0), InvalidArgument);
    tv.weights.pop_back();
    CHECK_THROWS_AS(divide_dewatermark(seq, tv), DimensionMismatch);
  }

  TEST_CASE("half-u filter leaves no watermark residual") {
    const std::size_t n = 16;
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const Image scene = oracle::random_image(n, n, 72);
    const Image wm = oracle::random_image(n, n, 73);
    const FilterRegion region = FilterRegion::half_u(n, n);
    const TVSignal tv = confine_tv(watermark_tv(wm, plan, 0.0), plan, region.erase);
    const Image out = filter_reconstruct(assemble_spectrum(measure(scene, plan, tv), plan), region);
    const Image host = scaled(reconstruct_image(measure(scene, plan), plan), 0.5 * tv.k2);
    CHECK(oracle::max_rel_error(out, host) < 1e-9);
  }

  TEST_CASE("conjugate-closed low-frequency filter removes a confined watermark") {
    const std::size_t n = 15;
    const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
    const Image scene = oracle::random_image(n, n, 74);
    const Image wm = oracle::random_image(n, n, 75);
    const FilterRegion region = FilterRegion::low_frequency(n, n, 0.2);
    REQUIRE(region.erase.conjugate_closed());
    CHECK(region.application == FilterRegion::Application::ConjugateClosed);
    const TVSignal tv = confine_tv(watermark_tv(wm, plan, 0.0), plan, region.erase);
    const auto fused = filter_dewatermark(assemble_spectrum(measure(scene, plan, tv), plan), region);
    auto host = filter_dewatermark(assemble_spectrum(measure(scene, plan), plan), region);
    for (auto& c : host.coeffs) c *= 0.5 * tv.k2;
    CHECK(oracle::max_rel_error(fused.coeffs, host.coeffs) < 1e-9);
    CHECK(fused.known_count() == n * n - region.erase.count());
  }

  TEST_CASE("region validation") {
    FilterRegion r = FilterRegion::half_u(8, 8);
    r.application = FilterRegion::Application::ConjugateClosed;
    CHECK_THROWS_AS(r.validate(), InvalidArgument);
    CHECK(to_string(FilterRegion::Application::BeforeSymmetry) == "before-symmetry");
    FilterRegion empty;
    CHECK_THROWS_AS(empty.validate(), InvalidArgument);
  }
}
