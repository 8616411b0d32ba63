#include "fspi/detector.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "fspi/error.hpp"
#include "fspi/rng.hpp"
#include "kahan.hpp"
#include "parallel.hpp"
#include "pattern_kernel.hpp"

namespace fspi {

void TVSignal::validate(std::size_t plan_size) const {
  if (weights.size() != plan_size) {
    throw DimensionMismatch("TV signal has " + std::to_string(weights.size()) + " weights for a plan of " +
                            std::to_string(plan_size));
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidArgument("TV signal weights must be finite and nonnegative");
  }
  if (!(k2 > 0.0) || !std::isfinite(k2)) throw InvalidArgument("TV signal K2 must be positive");
}

namespace {

class Fnv1a {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* c = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= c[i];
      h_ *= 0x100000001B3ULL;
    }
  }
  template <typename T>
  void value(T v) {
    bytes(&v, sizeof(v));
  }
  std::uint64_t digest() const { return h_; }

 private:
  std::uint64_t h_ = 0xCBF29CE484222325ULL;
};

MeasurementSequence forward(const Image& scene, const AcquisitionPlan& plan, const TVSignal* weights) {
  validate_scene(scene);
  plan.validate();
  if (scene.width() != plan.width() || scene.height() != plan.height()) {
    throw DimensionMismatch("scene is " + std::to_string(scene.width()) + "x" + std::to_string(scene.height()) +
                            " but plan is " + std::to_string(plan.width()) + "x" + std::to_string(plan.height()));
  }
  if (weights) weights->validate(plan.size());

  const detail::PlanKernel kernel(plan);
  MeasurementSequence seq;
  seq.plan_id = plan_id(plan);
  seq.values.resize(plan.size());
  const auto pixels = scene.values();
  detail::parallel_for(plan.size(), [&](std::size_t i) {
    const double w = weights ? weights->weights[i] : 1.0;
    seq.values[i] = w == 0.0 ? 0.0 : w * kernel.inner_product(plan.entries[i], pixels);
  });
  return seq;
}

}  // namespace

std::string plan_id(const AcquisitionPlan& plan) {
  Fnv1a h;
  h.value(static_cast<int>(plan.mode));
  h.value(plan.params.a);
  h.value(plan.params.b);
  h.value(static_cast<std::uint64_t>(plan.params.width));
  h.value(static_cast<std::uint64_t>(plan.params.height));
  h.value(static_cast<int>(plan.sampling.kind));
  h.value(plan.sampling.fraction);
  h.value(plan.pattern_seed);
  for (const auto& e : plan.entries) {
    h.value(static_cast<std::uint64_t>(e.u));
    h.value(static_cast<std::uint64_t>(e.v));
    h.value(e.phase_code);
    h.value(static_cast<int>(e.polarity));
    h.value(e.seed_index);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h.digest()));
  return buf;
}

MeasurementSequence measure(const Image& scene, const AcquisitionPlan& plan, const NoiseModel& noise) {
  return apply_noise(forward(scene, plan, nullptr), noise);
}

MeasurementSequence measure(const Image& scene, const AcquisitionPlan& plan, const TVSignal& weights,
                            const NoiseModel& noise) {
  return apply_noise(forward(scene, plan, &weights), noise);
}

double k1(const Image& scene, const PatternParams& params) {
  validate_scene(scene);
  return 2.0 * params.a * pixel_sum(scene);
}

double noise_sigma(const MeasurementSequence& seq, double snr_db) {
  if (seq.values.empty()) throw InvalidArgument("cannot add noise to an empty measurement sequence");
  if (!std::isfinite(snr_db)) {
    if (snr_db > 0) return 0.0;
    throw InvalidArgument("snr_db must be finite or +inf");
  }
  detail::NeumaierSum acc;
  for (double v : seq.values) acc.add(std::abs(v));
  const double mean_abs = acc.value() / static_cast<double>(seq.values.size());
  return mean_abs / std::pow(10.0, snr_db / 20.0);
}

MeasurementSequence apply_noise(MeasurementSequence seq, const NoiseModel& noise) {
  if (noise.kind == NoiseModel::Kind::None) return seq;
  if (seq.values.empty()) throw InvalidArgument("cannot add noise to an empty measurement sequence");
  if (!std::isfinite(noise.snr_db)) throw InvalidArgument("Gaussian noise needs a finite snr_db");
  const double sigma = noise_sigma(seq, noise.snr_db);
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    CounterRng rng(noise.seed, i);
    seq.values[i] += sigma * rng.next_normal();
  }
  seq.noise_snr_db = noise.snr_db;
  seq.noise_seed = noise.seed;
  return seq;
}

}  // namespace fspi
