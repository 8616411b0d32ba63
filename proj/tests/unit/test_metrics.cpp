#include <doctest.h>

#include <cmath>
#include <limits>

#include "fspi/error.hpp"
#include "fspi/metrics.hpp"
#include "oracles.hpp"

using namespace fspi;

TEST_SUITE("metrics") {
  TEST_CASE("psnr arithmetic on the fixed 8-bit range") {
    const MetricRange r = MetricRange::fixed(0.0, 255.0);
    Image a(2, 2, 0.0);
    Image b(2, 2, 255.0);
    CHECK(mse(a, b) == 65025.0);
    CHECK(psnr(a, b, 8, r) == doctest::Approx(0.0).epsilon(1e-12));
    Image c(2, 2, 100.0);
    Image d(2, 2, 100.0 + std::sqrt(6.5025));
    CHECK(psnr(c, d, 8, r) == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(std::isinf(psnr(c, c, 8, r)));
  }

  TEST_CASE("3x3 hand case") {
    const Image x(3, 3, std::vector<double>{0, 50, 100, 150, 200, 250, 30, 60, 90});
    const Image y(3, 3, std::vector<double>{10, 50, 90, 150, 210, 250, 20, 60, 100});
    const MetricRange r = MetricRange::fixed(0.0, 255.0);
    const double m = (100.0 + 100.0 + 100.0 + 100.0 + 100.0) / 9.0;
    CHECK(mse(x, y) == doctest::Approx(m));
    CHECK(psnr(x, y, 8, r) == doctest::Approx(10.0 * std::log10(65025.0 / m)));

    double mx = 0, my = 0;
    for (std::size_t i = 0; i < 9; ++i) {
      mx += x.values()[i] / 9.0;
      my += y.values()[i] / 9.0;
    }
    double vx = 0, vy = 0, cxy = 0;
    for (std::size_t i = 0; i < 9; ++i) {
      vx += (x.values()[i] - mx) * (x.values()[i] - mx) / 9.0;
      vy += (y.values()[i] - my) * (y.values()[i] - my) / 9.0;
      cxy += (x.values()[i] - mx) * (y.values()[i] - my) / 9.0;
    }
    const double c1 = 6.5025;
    const double c2 = 58.5225;
    const double expect = (2 * mx * my + c1) * (2 * cxy + c2) / ((mx * mx + my * my + c1) * (vx + vy + c2));
    CHECK(ssim(x, y, {}, r) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(ssim_raw(x, y) == doctest::Approx(expect).epsilon(1e-12));
  }

  TEST_CASE("ssim identities and symmetry") {
    const Image x = oracle::random_image(16, 16, 90);
    const Image y = oracle::random_image(16, 16, 91);
    CHECK(ssim(x, x) == 1.0);
    CHECK(ssim(x, y) == doctest::Approx(ssim(y, x)).epsilon(1e-14));
    CHECK(psnr(x, y) == doctest::Approx(psnr(y, x)).epsilon(1e-14));
    Image neg(16, 16);
    for (std::size_t i = 0; i < x.size(); ++i) neg.values()[i] = 1.0 - x.values()[i];
    CHECK(ssim(x, neg) < 0.0);
    CHECK(correlation(x, neg) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_THROWS_AS(ssim(x, Image(4, 4)), DimensionMismatch);
  }

  TEST_CASE("min-max mapping ignores gain and offset") {
    const Image x = oracle::random_image(8, 8, 92);
    Image y = scaled(x, 37.0);
    y = offset(y, -5.0);
    CHECK(psnr(x, y) > 250.0);
    CHECK(ssim(x, y) == doctest::Approx(1.0).epsilon(1e-12));
    const auto mapped = to_bit_range(x, MetricRange::min_max());
    const auto [lo, hi] = std::minmax_element(mapped.values().begin(), mapped.values().end());
    CHECK(*lo == 0.0);
    CHECK(*hi == doctest::Approx(255.0));
  }

  TEST_CASE("summation does not depend on pixel order") {
    const Image x = oracle::random_image(64, 64, 93, 0.0, 1e6);
    const Image y = oracle::random_image(64, 64, 94, 0.0, 1e6);
    Image xr(64, 64);
    Image yr(64, 64);
    for (std::size_t i = 0; i < x.size(); ++i) {
      xr.values()[i] = x.values()[x.size() - 1 - i];
      yr.values()[i] = y.values()[y.size() - 1 - i];
    }
    CHECK(std::abs(ssim(x, y) - ssim(xr, yr)) <= 1e-12);
    CHECK(std::abs(mse(x, y) - mse(xr, yr)) <= 1e-12 * mse(x, y));
  }

  TEST_CASE("system SNR") {
    MeasurementSequence s;
    s.values = {2.0, -2.0, 2.0};
    CHECK(snr_db(s, 2.0) == doctest::Approx(0.0));
    CHECK(snr_db(s, 0.04) == doctest::Approx(33.9794).epsilon(1e-5));
    CHECK(snr_db(s, 0.2) == doctest::Approx(20.0));
    CHECK(std::isinf(snr_db(s, 0.0)));
  }

  TEST_CASE("reports round-trip through JSON") {
    const Image x = oracle::random_image(8, 8, 95);
    const MetricReport r = compare(x, x, "a", "b");
    CHECK(std::isinf(r.psnr_db));
    CHECK(r.mse == 0.0);
    CHECK(r.normalization == "min-max");
    const MetricReport back = metric_report_from_json(to_json(r));
    CHECK(back.reference_id == "a");
    CHECK(std::isinf(back.psnr_db));
    const MetricReport f = compare(x, oracle::random_image(8, 8, 96), "a", "c", MetricRange::fixed(0.0, 1.0));
    CHECK(f.normalization == "fixed:0:1");
    CHECK(f.psnr_db == doctest::Approx(10.0 * std::log10(65025.0 / f.mse)).epsilon(1e-12));
    CHECK(metric_report_from_json(to_json(f)).ssim == f.ssim);
  }

  TEST_CASE("mean and standard deviation") {
    const auto [m, s] = mean_std({1.0, 2.0, 3.0, 4.0});
    CHECK(m == 2.5);
    CHECK(s == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(mean_std({7.0}).second == 0.0);
  }
}
