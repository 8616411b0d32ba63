#include "cli/config.hpp"

#include <charconv>
#include <cmath>

#include "fspi/error.hpp"
#include "fspi/io.hpp"
#include "fspi/scenes.hpp"

namespace fspi::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

constexpr std::string_view kSynth = "synth:";

void check_size(const Image& img, std::optional<std::size_t> size, const std::string& spec) {
  if (size && (img.width() != *size || img.height() != *size)) {
    throw DimensionMismatch("'" + spec + "' is " + std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                            " but --size is " + std::to_string(*size));
  }
}

}  // namespace

std::vector<double> parse_number_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty number list");
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ParseError("range must be lo:step:hi, got '" + std::string(text) + "'");
    const double lo = to_double(text.substr(0, c1));
    const double step = to_double(text.substr(c1 + 1, c2 - c1 - 1));
    const double hi = to_double(text.substr(c2 + 1));
    if (!(step > 0.0) || hi < lo) throw ParseError("range needs step > 0 and hi >= lo");
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(to_double(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Image load_scene(const std::string& spec, std::optional<std::size_t> size, std::uint64_t seed) {
  if (spec.starts_with(kSynth)) {
    const std::size_t n = size.value_or(64);
    return make_scene(std::string_view(spec).substr(kSynth.size()), n, n, seed);
  }
  Image img = read_gray(spec);
  check_size(img, size, spec);
  return img;
}

ColorImage load_color_scene(const std::string& spec, std::optional<std::size_t> size, std::uint64_t seed) {
  if (spec.starts_with(kSynth)) {
    const std::size_t n = size.value_or(64);
    return make_color_scene(std::string_view(spec).substr(kSynth.size()), n, n, seed);
  }
  ColorImage img = read_color(spec);
  check_size(img.channels[0], size, spec);
  return img;
}

std::string fmt(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace fspi::cli
