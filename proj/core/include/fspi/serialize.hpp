#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fspi/detector.hpp"
#include "fspi/dewatermark.hpp"
#include "fspi/illumination.hpp"
#include "fspi/recon.hpp"
#include "fspi/stego.hpp"
#include "fspi/watermark.hpp"

namespace fspi {

/// Text encodings of the library's data. Every double is written in shortest round-trip form,
/// so parse(format(x)) == x bit for bit. Parsers throw ParseError with the offending line.

/// Header `# fspi-plan v1 mode=... width=... height=... a=... b=... sampling=... seed=... order=... entries=...`
/// then one line per entry: `index mode fx_num fx_den fy_num fy_den phase_code polarity seed_index`.
std::string format_plan(const AcquisitionPlan& plan);
AcquisitionPlan parse_plan(std::string_view text);

/// `# plan=..., snr_db=..., seed=...` then `index,value` rows.
std::string format_measurements(const MeasurementSequence& seq);
MeasurementSequence parse_measurements(std::string_view text);

/// `# spectrum width=... height=...` then `u,v,re,im,known` rows for every grid entry.
std::string format_spectrum(const SpectrumGrid& spec);
SpectrumGrid parse_spectrum(std::string_view text);

/// `# tv k2=... dc_offset=... normalization=...` then `index,weight` rows.
std::string format_tv(const TVSignal& tv);
TVSignal parse_tv(std::string_view text);

/// `seed,size`.
std::string format_key(const PermutationKey& key);
PermutationKey parse_key(std::string_view text);

/// `# fspi-mapping width=... height=... watermark_width=... watermark_height=... r1_side=... key_seed=... normalization=...`
/// then `u,v,wu,wv,phase` rows (host frequency, watermark frequency, phase code).
std::string format_mapping(const FrequencyMapping& mapping);
FrequencyMapping parse_mapping(std::string_view text);

/// `# fspi-region width=... height=... application=...` then a single line of comma-separated
/// run lengths over the raster-ordered grid, alternating unselected and selected, starting
/// with unselected.
std::string format_region(const FilterRegion& region);
FilterRegion parse_region(std::string_view text);

/// Read a file and parse it; parse errors are prefixed with the path.
AcquisitionPlan load_plan(const std::filesystem::path& path);
MeasurementSequence load_measurements(const std::filesystem::path& path);
SpectrumGrid load_spectrum(const std::filesystem::path& path);
TVSignal load_tv(const std::filesystem::path& path);
PermutationKey load_key(const std::filesystem::path& path);
FrequencyMapping load_mapping(const std::filesystem::path& path);
FilterRegion load_region(const std::filesystem::path& path);

}  // namespace fspi
