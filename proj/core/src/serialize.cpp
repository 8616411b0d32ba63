#include "fspi/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "fspi/error.hpp"
#include "fspi/io.hpp"
#include "numfmt.hpp"

namespace fspi {

namespace {

using detail::format_double;
using detail::parse_double;
using detail::trim;

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    out.push_back(trim(text.substr(start, end - start)));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(const char* what, std::size_t line, const std::string& why) {
  throw ParseError(std::string(what) + " line " + std::to_string(line) + ": " + why);
}

// Splits a text into its first `#` comment line (the header) and the data lines after it.
// Blank lines and further comment lines are skipped; a line equal to `column_line` is skipped.
struct Document {
  std::map<std::string, std::string, std::less<>> header;
  std::string header_tag;
  // Bare tokens (no '=') of the header, in order.
  std::vector<std::string> tags;
  std::vector<Line> rows;
};

Document parse_document(std::string_view text, const char* what, std::string_view column_line = {}) {
  Document doc;
  bool have_header = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (have_header) continue;
      have_header = true;
      std::string cleaned(trim(line.substr(1)));
      for (char& c : cleaned) {
        if (c == ',') c = ' ';
      }
      bool first = true;
      for (auto tok : split_ws(cleaned)) {
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) {
          if (first) doc.header_tag = std::string(tok);
          doc.tags.emplace_back(tok);
        } else {
          doc.header.emplace(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
        }
        first = false;
      }
      continue;
    }
    if (!column_line.empty() && line == column_line) continue;
    doc.rows.push_back({i + 1, line});
  }
  if (!have_header) throw ParseError(std::string(what) + ": missing '#' header line");
  return doc;
}

const std::string& field(const Document& doc, const char* key, const char* what) {
  const auto it = doc.header.find(key);
  if (it == doc.header.end()) throw ParseError(std::string(what) + ": header lacks '" + key + "'");
  return it->second;
}

template <typename Int>
Int header_int(const Document& doc, const char* key, const char* what) {
  return detail::parse_int<Int>(field(doc, key, what), key);
}

double header_double(const Document& doc, const char* key, const char* what) {
  return parse_double(field(doc, key, what), key);
}

std::string optional_number(const std::optional<double>& v) { return v ? format_double(*v) : "none"; }

template <typename T>
std::string optional_uint(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "none";
}

template <typename T, typename Fn>
T wrap_load(const std::filesystem::path& path, Fn&& parse) {
  const std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

std::string_view polarity_token(Polarity p) { return p == Polarity::Plus ? "+" : "-"; }

}  // namespace

std::string format_plan(const AcquisitionPlan& plan) {
  std::string out = "# fspi-plan v1 mode=" + std::string(to_string(plan.mode)) +
                    " width=" + std::to_string(plan.width()) + " height=" + std::to_string(plan.height()) +
                    " a=" + format_double(plan.params.a) + " b=" + format_double(plan.params.b) +
                    " sampling=" + plan.sampling.to_string() + " seed=" + std::to_string(plan.pattern_seed) +
                    " order=" + (plan.sampling.kind == Sampling::Kind::LowFrequency ? "distance" : "raster") +
                    " entries=" + std::to_string(plan.size()) + "\n";
  const std::string mode(to_string(plan.mode));
  const std::string w = std::to_string(plan.width());
  const std::string h = std::to_string(plan.height());
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const auto& e = plan.entries[i];
    out += std::to_string(i) + ' ' + mode + ' ' + std::to_string(e.u) + ' ' + w + ' ' + std::to_string(e.v) + ' ' +
           h + ' ' + std::to_string(e.phase_code) + ' ' + std::string(polarity_token(e.polarity)) + ' ' +
           std::to_string(e.seed_index) + '\n';
  }
  return out;
}

AcquisitionPlan parse_plan(std::string_view text) {
  constexpr const char* what = "plan";
  const Document doc = parse_document(text, what);
  if (doc.header_tag != "fspi-plan") throw ParseError("plan: header must start with 'fspi-plan'");
  if (doc.tags.size() < 2 || doc.tags[1] != "v1") throw ParseError("plan: unsupported format version");
  AcquisitionPlan plan;
  plan.mode = parse_pattern_mode(field(doc, "mode", what));
  plan.params.width = header_int<std::size_t>(doc, "width", what);
  plan.params.height = header_int<std::size_t>(doc, "height", what);
  plan.params.a = header_double(doc, "a", what);
  plan.params.b = header_double(doc, "b", what);
  plan.sampling = Sampling::parse(field(doc, "sampling", what));
  plan.pattern_seed = header_int<std::uint64_t>(doc, "seed", what);
  const auto entries = header_int<std::size_t>(doc, "entries", what);
  plan.params.validate();
  if (doc.rows.size() != entries) {
    throw ParseError("plan: header declares " + std::to_string(entries) + " entries, found " +
                     std::to_string(doc.rows.size()));
  }
  plan.entries.reserve(entries);
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto& row = doc.rows[i];
    const auto tok = split_ws(row.text);
    if (tok.size() != 9) fail(what, row.number, "expected 9 fields, found " + std::to_string(tok.size()));
    if (detail::parse_int<std::size_t>(tok[0], "index") != i) fail(what, row.number, "entry index out of sequence");
    PatternSpec e;
    e.mode = parse_pattern_mode(tok[1]);
    if (e.mode != plan.mode) fail(what, row.number, "entry mode differs from the header");
    e.u = detail::parse_int<std::size_t>(tok[2], "fx_num");
    const auto fx_den = detail::parse_int<std::size_t>(tok[3], "fx_den");
    e.v = detail::parse_int<std::size_t>(tok[4], "fy_num");
    const auto fy_den = detail::parse_int<std::size_t>(tok[5], "fy_den");
    if (fx_den != plan.width() || fy_den != plan.height()) {
      fail(what, row.number, "frequency denominators must equal the grid size");
    }
    e.phase_code = detail::parse_int<int>(tok[6], "phase_code");
    if (tok[7] == "+") {
      e.polarity = Polarity::Plus;
    } else if (tok[7] == "-") {
      e.polarity = Polarity::Minus;
    } else {
      fail(what, row.number, "polarity must be '+' or '-'");
    }
    e.seed_index = detail::parse_int<std::uint64_t>(tok[8], "seed_index");
    plan.entries.push_back(e);
  }
  try {
    plan.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("plan: ") + e.what());
  }
  return plan;
}

std::string format_measurements(const MeasurementSequence& seq) {
  std::string out = "# plan=" + (seq.plan_id.empty() ? std::string("none") : seq.plan_id) +
                    ", snr_db=" + optional_number(seq.noise_snr_db) + ", seed=" + optional_uint(seq.noise_seed) +
                    "\nindex,value\n";
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    out += std::to_string(i) + ',' + format_double(seq.values[i]) + '\n';
  }
  return out;
}

MeasurementSequence parse_measurements(std::string_view text) {
  constexpr const char* what = "measurements";
  const Document doc = parse_document(text, what, "index,value");
  MeasurementSequence seq;
  const auto& plan = field(doc, "plan", what);
  if (plan != "none") seq.plan_id = plan;
  const auto& snr = field(doc, "snr_db", what);
  if (snr != "none") seq.noise_snr_db = parse_double(snr, "snr_db");
  const auto& seed = field(doc, "seed", what);
  if (seed != "none") seq.noise_seed = detail::parse_int<std::uint64_t>(seed, "seed");
  seq.values.reserve(doc.rows.size());
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto tok = split(doc.rows[i].text, ',');
    if (tok.size() != 2) fail(what, doc.rows[i].number, "expected 'index,value'");
    if (detail::parse_int<std::size_t>(tok[0], "index") != i) fail(what, doc.rows[i].number, "index out of sequence");
    const double v = parse_double(tok[1], "value");
    if (!std::isfinite(v)) fail(what, doc.rows[i].number, "non-finite measurement");
    seq.values.push_back(v);
  }
  return seq;
}

std::string format_spectrum(const SpectrumGrid& spec) {
  std::string out = "# spectrum width=" + std::to_string(spec.width) + " height=" + std::to_string(spec.height) +
                    "\nu,v,re,im,known\n";
  for (std::size_t v = 0; v < spec.height; ++v) {
    for (std::size_t u = 0; u < spec.width; ++u) {
      const auto c = spec.at({u, v});
      out += std::to_string(u) + ',' + std::to_string(v) + ',' + format_double(c.real()) + ',' +
             format_double(c.imag()) + ',' + (spec.is_known({u, v}) ? '1' : '0') + '\n';
    }
  }
  return out;
}

SpectrumGrid parse_spectrum(std::string_view text) {
  constexpr const char* what = "spectrum";
  const Document doc = parse_document(text, what, "u,v,re,im,known");
  SpectrumGrid spec(header_int<std::size_t>(doc, "width", what), header_int<std::size_t>(doc, "height", what));
  if (spec.width == 0 || spec.height == 0) throw ParseError("spectrum: zero dimension");
  std::vector<std::uint8_t> seen(spec.width * spec.height, 0);
  for (const auto& row : doc.rows) {
    const auto tok = split(row.text, ',');
    if (tok.size() != 5) fail(what, row.number, "expected 'u,v,re,im,known'");
    const Frequency f{detail::parse_int<std::size_t>(tok[0], "u"), detail::parse_int<std::size_t>(tok[1], "v")};
    if (f.u >= spec.width || f.v >= spec.height) fail(what, row.number, "frequency outside the grid");
    if (seen[spec.index(f)]++) fail(what, row.number, "duplicate frequency");
    const std::complex<double> c{parse_double(tok[2], "re"), parse_double(tok[3], "im")};
    if (tok[4] == "1") {
      spec.set(f, c);
    } else if (tok[4] == "0") {
      if (c != std::complex<double>{}) fail(what, row.number, "unknown entry must be 0+0j");
    } else {
      fail(what, row.number, "known must be 0 or 1");
    }
  }
  return spec;
}

std::string format_tv(const TVSignal& tv) {
  std::string out = "# tv k2=" + format_double(tv.k2) + " dc_offset=" + format_double(tv.dc_offset) +
                    " normalization=" + format_double(tv.normalization) + "\nindex,weight\n";
  for (std::size_t i = 0; i < tv.weights.size(); ++i) {
    out += std::to_string(i) + ',' + format_double(tv.weights[i]) + '\n';
  }
  return out;
}

TVSignal parse_tv(std::string_view text) {
  constexpr const char* what = "tv";
  const Document doc = parse_document(text, what, "index,weight");
  TVSignal tv;
  tv.k2 = header_double(doc, "k2", what);
  tv.dc_offset = header_double(doc, "dc_offset", what);
  tv.normalization = header_double(doc, "normalization", what);
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto tok = split(doc.rows[i].text, ',');
    if (tok.size() != 2) fail(what, doc.rows[i].number, "expected 'index,weight'");
    if (detail::parse_int<std::size_t>(tok[0], "index") != i) fail(what, doc.rows[i].number, "index out of sequence");
    tv.weights.push_back(parse_double(tok[1], "weight"));
  }
  try {
    tv.validate(tv.weights.size());
  } catch (const Error& e) {
    throw ParseError(std::string("tv: ") + e.what());
  }
  return tv;
}

std::string format_key(const PermutationKey& key) {
  return "seed,size\n" + std::to_string(key.seed) + ',' + std::to_string(key.size) + '\n';
}

PermutationKey parse_key(std::string_view text) {
  for (const auto line : split_lines(text)) {
    if (line.empty() || line.front() == '#' || line == "seed,size") continue;
    const auto tok = split(line, ',');
    if (tok.size() != 2) throw ParseError("key: expected 'seed,size'");
    PermutationKey key{detail::parse_int<std::uint64_t>(tok[0], "seed"), detail::parse_int<std::size_t>(tok[1], "size")};
    if (key.size == 0) throw ParseError("key: size must be positive");
    return key;
  }
  throw ParseError("key: no 'seed,size' record");
}

std::string format_mapping(const FrequencyMapping& m) {
  std::string out = "# fspi-mapping width=" + std::to_string(m.width) + " height=" + std::to_string(m.height) +
                    " watermark_width=" + std::to_string(m.watermark_width) +
                    " watermark_height=" + std::to_string(m.watermark_height) +
                    " r1_side=" + std::to_string(m.r1_side) + " key_seed=" + optional_uint(m.key_seed) +
                    " normalization=" + format_double(m.normalization) + "\nu,v,wu,wv,phase\n";
  for (const auto& e : m.entries) {
    out += std::to_string(e.host.u) + ',' + std::to_string(e.host.v) + ',' + std::to_string(e.watermark.u) + ',' +
           std::to_string(e.watermark.v) + ',' + std::to_string(e.phase_code) + '\n';
  }
  return out;
}

FrequencyMapping parse_mapping(std::string_view text) {
  constexpr const char* what = "mapping";
  const Document doc = parse_document(text, what, "u,v,wu,wv,phase");
  if (doc.header_tag != "fspi-mapping") throw ParseError("mapping: header must start with 'fspi-mapping'");
  FrequencyMapping m;
  m.width = header_int<std::size_t>(doc, "width", what);
  m.height = header_int<std::size_t>(doc, "height", what);
  m.watermark_width = header_int<std::size_t>(doc, "watermark_width", what);
  m.watermark_height = header_int<std::size_t>(doc, "watermark_height", what);
  m.r1_side = header_int<std::size_t>(doc, "r1_side", what);
  const auto& key = field(doc, "key_seed", what);
  if (key != "none") m.key_seed = detail::parse_int<std::uint64_t>(key, "key_seed");
  m.normalization = header_double(doc, "normalization", what);
  for (const auto& row : doc.rows) {
    const auto tok = split(row.text, ',');
    if (tok.size() != 5) fail(what, row.number, "expected 'u,v,wu,wv,phase'");
    m.entries.push_back({{detail::parse_int<std::size_t>(tok[0], "u"), detail::parse_int<std::size_t>(tok[1], "v")},
                         {detail::parse_int<std::size_t>(tok[2], "wu"), detail::parse_int<std::size_t>(tok[3], "wv")},
                         detail::parse_int<int>(tok[4], "phase")});
  }
  try {
    m.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("mapping: ") + e.what());
  }
  return m;
}

std::string format_region(const FilterRegion& region) {
  region.validate();
  std::string out = "# fspi-region width=" + std::to_string(region.erase.width) +
                    " height=" + std::to_string(region.erase.height) +
                    " application=" + std::string(to_string(region.application)) + "\n";
  std::uint8_t current = 0;
  std::size_t run = 0;
  bool first = true;
  auto emit = [&] {
    if (!first) out += ',';
    out += std::to_string(run);
    first = false;
  };
  for (std::uint8_t s : region.erase.selected) {
    const std::uint8_t bit = s ? 1 : 0;
    if (bit != current) {
      emit();
      current = bit;
      run = 0;
    }
    ++run;
  }
  emit();
  out += '\n';
  return out;
}

FilterRegion parse_region(std::string_view text) {
  constexpr const char* what = "region";
  const Document doc = parse_document(text, what);
  if (doc.header_tag != "fspi-region") throw ParseError("region: header must start with 'fspi-region'");
  FilterRegion region;
  region.erase = FrequencyRegion(header_int<std::size_t>(doc, "width", what),
                                 header_int<std::size_t>(doc, "height", what));
  const auto& app = field(doc, "application", what);
  if (app == "conjugate-closed") {
    region.application = FilterRegion::Application::ConjugateClosed;
  } else if (app == "before-symmetry") {
    region.application = FilterRegion::Application::BeforeSymmetry;
  } else {
    throw ParseError("region: unknown application '" + app + "'");
  }
  if (doc.rows.size() != 1) throw ParseError("region: expected exactly one run-length line");
  std::size_t pos = 0;
  std::uint8_t bit = 0;
  for (auto tok : split(doc.rows[0].text, ',')) {
    const auto run = detail::parse_int<std::size_t>(tok, "run length");
    if (pos + run > region.erase.selected.size()) fail(what, doc.rows[0].number, "runs exceed the grid");
    std::fill_n(region.erase.selected.begin() + static_cast<std::ptrdiff_t>(pos), run, bit);
    pos += run;
    bit ^= 1;
  }
  if (pos != region.erase.selected.size()) fail(what, doc.rows[0].number, "runs do not cover the grid");
  try {
    region.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("region: ") + e.what());
  }
  return region;
}

AcquisitionPlan load_plan(const std::filesystem::path& path) {
  return wrap_load<AcquisitionPlan>(path, [](std::string_view t) { return parse_plan(t); });
}
MeasurementSequence load_measurements(const std::filesystem::path& path) {
  return wrap_load<MeasurementSequence>(path, [](std::string_view t) { return parse_measurements(t); });
}
SpectrumGrid load_spectrum(const std::filesystem::path& path) {
  return wrap_load<SpectrumGrid>(path, [](std::string_view t) { return parse_spectrum(t); });
}
TVSignal load_tv(const std::filesystem::path& path) {
  return wrap_load<TVSignal>(path, [](std::string_view t) { return parse_tv(t); });
}
PermutationKey load_key(const std::filesystem::path& path) {
  return wrap_load<PermutationKey>(path, [](std::string_view t) { return parse_key(t); });
}
FrequencyMapping load_mapping(const std::filesystem::path& path) {
  return wrap_load<FrequencyMapping>(path, [](std::string_view t) { return parse_mapping(t); });
}
FilterRegion load_region(const std::filesystem::path& path) {
  return wrap_load<FilterRegion>(path, [](std::string_view t) { return parse_region(t); });
}

}  // namespace fspi
