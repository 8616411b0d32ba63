#pragma once

#include <filesystem>
#include <string>

#include "fspi/image.hpp"

namespace fspi {

/// Netpbm encoding for writers.
enum class PnmEncoding { Ascii, Binary };

/// Reads PGM, PPM (P2, P3, P5, P6; maxval up to 65535) or PNG, dispatching on the file
/// signature. Values are divided by the format's maximum so they land in [0, 1]. Color
/// inputs are converted with the Rec. 601 luma weights.
Image read_gray(const std::filesystem::path& path);

/// As read_gray; grayscale inputs are replicated over the three channels.
ColorImage read_color(const std::filesystem::path& path);

/// Writes values in [0, 1] (clamped) quantised to maxval.
void write_pgm(const std::filesystem::path& path, const Image& img, PnmEncoding encoding = PnmEncoding::Binary,
               int maxval = 255);
void write_ppm(const std::filesystem::path& path, const ColorImage& img, PnmEncoding encoding = PnmEncoding::Binary,
               int maxval = 255);

/// Min-max normalises before writing; for raw reconstructions of arbitrary scale.
void write_display_pgm(const std::filesystem::path& path, const Image& img);

/// Row-per-line CSV of the raw values (shortest round-trip formatting) with a `#` header comment.
void write_matrix_csv(const std::filesystem::path& path, const Image& img, const std::string& comment = {});
Image read_matrix_csv(const std::filesystem::path& path);

/// Whole-file helpers that raise IoError naming the path and cause.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace fspi
