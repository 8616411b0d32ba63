#include "fspi/dewatermark.hpp"

#include <algorithm>
#include <cmath>

#include "fspi/error.hpp"

namespace fspi {

MeasurementSequence divide_dewatermark(const MeasurementSequence& seq, const TVSignal& tv,
                                       std::optional<double> epsilon) {
  if (seq.size() != tv.size()) {
    throw DimensionMismatch("measurement sequence has " + std::to_string(seq.size()) + " entries but TV signal has " +
                            std::to_string(tv.size()));
  }
  if (seq.values.empty()) throw InvalidArgument("empty measurement sequence");
  tv.validate(seq.size());
  double eps = 0.0;
  if (epsilon) {
    if (!(*epsilon > 0.0) || !std::isfinite(*epsilon)) throw InvalidArgument("epsilon must be positive");
    eps = *epsilon;
  } else {
    eps = 1e-6 * *std::max_element(tv.weights.begin(), tv.weights.end());
    if (!(eps > 0.0)) throw InvalidArgument("TV signal weights are all zero");
  }
  MeasurementSequence out = seq;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] /= std::max(tv.weights[i], eps);
  return out;
}

void FilterRegion::validate() const {
  if (erase.width == 0 || erase.height == 0 || erase.selected.size() != erase.width * erase.height) {
    throw InvalidArgument("filter region grid is empty or malformed");
  }
  if (application == Application::ConjugateClosed && !erase.conjugate_closed()) {
    throw InvalidArgument("filter region is declared conjugate-closed but is not");
  }
}

FilterRegion FilterRegion::half_u(std::size_t width, std::size_t height) {
  return {half_u_region(width, height), Application::BeforeSymmetry};
}

FilterRegion FilterRegion::low_frequency(std::size_t width, std::size_t height, double fraction) {
  FilterRegion r{low_frequency_region(width, height, fraction), Application::BeforeSymmetry};
  if (r.erase.conjugate_closed()) r.application = Application::ConjugateClosed;
  return r;
}

std::string_view to_string(FilterRegion::Application app) noexcept {
  return app == FilterRegion::Application::ConjugateClosed ? "conjugate-closed" : "before-symmetry";
}

SpectrumGrid filter_dewatermark(SpectrumGrid spec, const FilterRegion& region) {
  region.validate();
  if (region.erase.width != spec.width || region.erase.height != spec.height) {
    throw DimensionMismatch("filter region is " + std::to_string(region.erase.width) + "x" +
                            std::to_string(region.erase.height) + " but spectrum is " + std::to_string(spec.width) +
                            "x" + std::to_string(spec.height));
  }
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    if (region.erase.selected[i]) {
      spec.coeffs[i] = {};
      spec.known[i] = 0;
    }
  }
  return spec;
}

Image filter_reconstruct(const SpectrumGrid& spec, const FilterRegion& region) {
  SpectrumGrid filtered = filter_dewatermark(spec, region);
  if (region.application == FilterRegion::Application::BeforeSymmetry) {
    filtered = complete_symmetry(std::move(filtered));
  }
  return reconstruct(filtered);
}

}  // namespace fspi
