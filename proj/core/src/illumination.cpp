#include "fspi/illumination.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "fspi/error.hpp"
#include "numfmt.hpp"
#include "pattern_kernel.hpp"

namespace fspi {

std::string_view to_string(PatternMode mode) noexcept {
  switch (mode) {
    case PatternMode::FourStepSinusoid: return "four-step";
    case PatternMode::ThreeStepSinusoid: return "three-step";
    case PatternMode::SinusoidOrthogonal: return "sin-orth";
    case PatternMode::HadamardDiff: return "hadamard";
    case PatternMode::Random: return "random";
  }
  return "?";
}

PatternMode parse_pattern_mode(std::string_view token) {
  token = detail::trim(token);
  for (auto m : {PatternMode::FourStepSinusoid, PatternMode::ThreeStepSinusoid,
                 PatternMode::SinusoidOrthogonal, PatternMode::HadamardDiff, PatternMode::Random}) {
    if (token == to_string(m)) return m;
  }
  throw ParseError("unknown pattern mode '" + std::string(token) + "'");
}

bool is_sinusoid(PatternMode mode) noexcept {
  return mode == PatternMode::FourStepSinusoid || mode == PatternMode::ThreeStepSinusoid ||
         mode == PatternMode::SinusoidOrthogonal;
}

int phase_steps(PatternMode mode) noexcept {
  switch (mode) {
    case PatternMode::FourStepSinusoid:
    case PatternMode::SinusoidOrthogonal:
      return 4;
    case PatternMode::ThreeStepSinusoid:
      return 3;
    default:
      return 0;
  }
}

double PatternSpec::phase() const noexcept {
  const int steps = phase_steps(mode);
  if (steps == 0) return 0.0;
  return 2.0 * std::numbers::pi * static_cast<double>(phase_code) / static_cast<double>(steps);
}

void PatternParams::validate() const {
  if (width == 0 || height == 0) throw InvalidArgument("pattern grid must be at least 1x1");
  if (!(std::isfinite(a) && std::isfinite(b))) throw InvalidArgument("pattern constants must be finite");
  if (!(b > 0.0)) throw InvalidArgument("pattern contrast b must be positive");
  if (a < b) throw InvalidArgument("pattern constants need a >= b so light stays nonnegative");
}

Sampling Sampling::low_frequency(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InvalidArgument("low-frequency fraction must lie in (0, 1]");
  }
  return {Kind::LowFrequency, fraction};
}

std::string Sampling::to_string() const {
  switch (kind) {
    case Kind::Full: return "full";
    case Kind::HalfSpectrum: return "half";
    case Kind::LowFrequency: return "lowfreq:" + detail::format_double(fraction);
  }
  return "?";
}

Sampling Sampling::parse(std::string_view token) {
  token = detail::trim(token);
  if (token == "full") return full();
  if (token == "half") return half_spectrum();
  constexpr std::string_view prefix = "lowfreq:";
  if (token.starts_with(prefix)) {
    return low_frequency(detail::parse_double(token.substr(prefix.size()), "sampling fraction"));
  }
  throw ParseError("unknown sampling '" + std::string(token) + "'");
}

std::vector<PatternGroup> AcquisitionPlan::groups() const {
  params.validate();
  if (entries.empty()) throw InvalidArgument("acquisition plan is empty");
  const std::size_t w = params.width;
  const std::size_t h = params.height;

  std::vector<PatternGroup> out;
  if (mode == PatternMode::Random) {
    out.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].mode != mode) throw InvalidArgument("entry mode differs from plan mode");
      out.push_back({i, 1, {0, 0}});
    }
    return out;
  }

  std::vector<std::uint8_t> seen(w * h, 0);
  std::size_t i = 0;
  while (i < entries.size()) {
    const PatternSpec& head = entries[i];
    if (head.u >= w || head.v >= h) {
      throw InvalidArgument("entry " + std::to_string(i) + " frequency lies outside the grid");
    }
    std::size_t j = i;
    unsigned phase_mask = 0;
    unsigned polarity_mask = 0;
    while (j < entries.size() && entries[j].u == head.u && entries[j].v == head.v) {
      const PatternSpec& e = entries[j];
      if (e.mode != mode) throw InvalidArgument("entry " + std::to_string(j) + " mode differs from plan mode");
      if (mode == PatternMode::HadamardDiff) {
        const unsigned bit = e.polarity == Polarity::Plus ? 1U : 2U;
        if (polarity_mask & bit) throw InvalidArgument("duplicate Hadamard polarity in group");
        polarity_mask |= bit;
      } else {
        if (e.phase_code < 0 || e.phase_code >= phase_steps(mode)) {
          throw InvalidArgument("entry " + std::to_string(j) + " has an invalid phase code");
        }
        const unsigned bit = 1U << e.phase_code;
        if (phase_mask & bit) throw InvalidArgument("duplicate phase in group at entry " + std::to_string(j));
        phase_mask |= bit;
      }
      ++j;
    }
    const Frequency f = head.frequency();
    bool complete = false;
    switch (mode) {
      case PatternMode::FourStepSinusoid:
        complete = phase_mask == 0b1111U || (phase_mask == 0b0101U && is_self_conjugate(f, w, h));
        break;
      case PatternMode::ThreeStepSinusoid: complete = phase_mask == 0b111U; break;
      case PatternMode::SinusoidOrthogonal: complete = phase_mask == 0b11U; break;
      case PatternMode::HadamardDiff: complete = polarity_mask == 0b11U; break;
      case PatternMode::Random: break;
    }
    if (!complete) {
      throw InvalidArgument("incomplete measurement group at entry " + std::to_string(i));
    }
    if (seen[f.v * w + f.u]) {
      throw InvalidArgument("frequency (" + std::to_string(f.u) + "," + std::to_string(f.v) +
                            ") measured twice");
    }
    seen[f.v * w + f.u] = 1;
    out.push_back({i, j - i, f});
    i = j;
  }

  if (sampling.kind == Sampling::Kind::HalfSpectrum) {
    for (const auto& g : out) {
      const Frequency c = conjugate(g.frequency, w, h);
      if (c != g.frequency && seen[c.v * w + c.u]) {
        throw InvalidArgument("half-spectrum plan measures both members of a conjugate pair");
      }
    }
  }
  return out;
}

namespace {

void append_sinusoid_group(std::vector<PatternSpec>& entries, PatternMode mode, Frequency f,
                           bool two_phase_only) {
  const int steps = mode == PatternMode::SinusoidOrthogonal ? 2 : phase_steps(mode);
  for (int k = 0; k < steps; ++k) {
    if (two_phase_only && (k == 1 || k == 3)) continue;
    PatternSpec spec;
    spec.mode = mode;
    spec.u = f.u;
    spec.v = f.v;
    spec.phase_code = k;
    entries.push_back(spec);
  }
}

}  // namespace

AcquisitionPlan build_plan(PatternMode mode, const PatternParams& params, Sampling sampling,
                           const PlanOptions& options) {
  params.validate();
  AcquisitionPlan plan;
  plan.params = params;
  plan.mode = mode;
  plan.sampling = sampling;
  plan.pattern_seed = options.seed;
  const std::size_t w = params.width;
  const std::size_t h = params.height;

  if (mode == PatternMode::HadamardDiff) {
    if (sampling.kind != Sampling::Kind::Full) {
      throw InvalidArgument("Hadamard plans support full sampling only");
    }
    if (!std::has_single_bit(w * h)) {
      throw InvalidArgument("Hadamard plans need width*height to be a power of two");
    }
    plan.entries.reserve(2 * w * h);
    for (std::size_t k = 0; k < w * h; ++k) {
      for (Polarity pol : {Polarity::Plus, Polarity::Minus}) {
        PatternSpec spec;
        spec.mode = mode;
        spec.u = k % w;
        spec.v = k / w;
        spec.polarity = pol;
        plan.entries.push_back(spec);
      }
    }
  } else if (mode == PatternMode::Random) {
    if (sampling.kind != Sampling::Kind::Full) {
      throw InvalidArgument("random plans support full sampling only");
    }
    const std::size_t count = options.random_patterns > 0 ? options.random_patterns : 4 * w * h;
    plan.entries.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      PatternSpec spec;
      spec.mode = mode;
      spec.seed_index = i;
      plan.entries.push_back(spec);
    }
  } else {
    std::vector<Frequency> freqs;
    switch (sampling.kind) {
      case Sampling::Kind::Full:
        for (std::size_t v = 0; v < h; ++v) {
          for (std::size_t u = 0; u < w; ++u) freqs.push_back({u, v});
        }
        break;
      case Sampling::Kind::HalfSpectrum:
        freqs = half_spectrum_frequencies(w, h);
        break;
      case Sampling::Kind::LowFrequency: {
        if (!(sampling.fraction > 0.0 && sampling.fraction <= 1.0)) {
          throw InvalidArgument("low-frequency fraction must lie in (0, 1]");
        }
        const auto order = frequencies_by_distance(w, h);
        const auto keep = std::clamp<std::size_t>(
            static_cast<std::size_t>(std::llround(sampling.fraction * static_cast<double>(order.size()))),
            1, order.size());
        freqs.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
        break;
      }
    }
    const bool half = sampling.kind == Sampling::Kind::HalfSpectrum;
    for (const Frequency f : freqs) {
      const bool two_phase = half && mode == PatternMode::FourStepSinusoid && is_self_conjugate(f, w, h);
      append_sinusoid_group(plan.entries, mode, f, two_phase);
    }
  }
  if (plan.entries.empty()) throw InvalidArgument("acquisition plan is empty");
  return plan;
}

AcquisitionPlan build_plan(PatternMode mode, std::size_t width, std::size_t height, Sampling sampling,
                           const PlanOptions& options) {
  PatternParams params;
  params.width = width;
  params.height = height;
  return build_plan(mode, params, sampling, options);
}

Image sinusoid_pattern(const PatternSpec& spec, const PatternParams& params) {
  if (!is_sinusoid(spec.mode)) throw ModeMismatch("sinusoid_pattern needs a sinusoid mode");
  detail::SinusoidKernel kernel(params);
  Image out(params.width, params.height);
  kernel.fill(spec, out.values());
  return out;
}

Image hadamard_pattern(const PatternSpec& spec, const PatternParams& params) {
  if (spec.mode != PatternMode::HadamardDiff) throw ModeMismatch("hadamard_pattern needs HadamardDiff");
  detail::HadamardKernel kernel(params);
  if (spec.u >= params.width || spec.v >= params.height) {
    throw InvalidArgument("Hadamard basis index outside the grid");
  }
  Image out(params.width, params.height);
  kernel.fill(spec, out.values());
  return out;
}

Image random_pattern(const PatternSpec& spec, const PatternParams& params, std::uint64_t seed) {
  if (spec.mode != PatternMode::Random) throw ModeMismatch("random_pattern needs Random mode");
  detail::RandomKernel kernel(params, seed);
  Image out(params.width, params.height);
  kernel.fill(spec, out.values());
  return out;
}

Image plan_pattern(const AcquisitionPlan& plan, std::size_t index) {
  if (index >= plan.entries.size()) throw InvalidArgument("plan index out of range");
  const PatternSpec& spec = plan.entries[index];
  switch (plan.mode) {
    case PatternMode::HadamardDiff: return hadamard_pattern(spec, plan.params);
    case PatternMode::Random: return random_pattern(spec, plan.params, plan.pattern_seed);
    default: return sinusoid_pattern(spec, plan.params);
  }
}

}  // namespace fspi
