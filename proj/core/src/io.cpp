#include "fspi/io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "fspi/error.hpp"
#include "numfmt.hpp"

namespace fspi {

namespace {

struct RawRaster {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t channels = 0;
  // Samples scaled to [0, 1], interleaved.
  std::vector<double> samples;
};

std::string describe(const std::filesystem::path& path) { return "'" + path.string() + "'"; }

[[noreturn]] void io_fail(const std::filesystem::path& path, const std::string& what) {
  throw IoError(what + " " + describe(path) + ": " + std::strerror(errno));
}

class PnmReader {
 public:
  PnmReader(const std::string& data, const std::filesystem::path& path) : data_(data), path_(path) {}

  RawRaster read() {
    if (data_.size() < 2 || data_[0] != 'P') fail("not a Netpbm file");
    const char kind = data_[1];
    pos_ = 2;
    RawRaster r;
    bool binary = false;
    switch (kind) {
      case '2': r.channels = 1; break;
      case '3': r.channels = 3; break;
      case '5': r.channels = 1; binary = true; break;
      case '6': r.channels = 3; binary = true; break;
      default: fail(std::string("unsupported Netpbm type P") + kind);
    }
    r.width = next_uint("width");
    r.height = next_uint("height");
    const std::size_t maxval = next_uint("maxval");
    if (r.width == 0 || r.height == 0) fail("zero image dimension");
    if (maxval == 0 || maxval > 65535) fail("maxval must lie in 1..65535");
    const std::size_t count = r.width * r.height * r.channels;
    r.samples.resize(count);
    const double scale = 1.0 / static_cast<double>(maxval);
    if (binary) {
      ++pos_;  // single whitespace after maxval
      const std::size_t bytes = maxval > 255 ? 2 : 1;
      if (data_.size() < pos_ + count * bytes) fail("truncated pixel data");
      const auto* p = reinterpret_cast<const unsigned char*>(data_.data() + pos_);
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t v = bytes == 2 ? (std::size_t{p[2 * i]} << 8) | p[2 * i + 1] : p[i];
        if (v > maxval) fail("sample exceeds maxval");
        r.samples[i] = static_cast<double>(v) * scale;
      }
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t v = next_uint("sample");
        if (v > maxval) fail("sample exceeds maxval");
        r.samples[i] = static_cast<double>(v) * scale;
      }
    }
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(describe(path_) + ": " + why); }

  void skip_space() {
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t next_uint(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return detail::parse_int<std::size_t>(std::string_view(data_).substr(start, pos_ - start), what);
  }

  const std::string& data_;
  const std::filesystem::path& path_;
  std::size_t pos_ = 0;
};

RawRaster read_png(const std::filesystem::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw IoError("cannot read PNG " + describe(path) + ": " + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw IoError("cannot decode PNG " + describe(path) + ": " + msg);
  }
  RawRaster r;
  r.width = image.width;
  r.height = image.height;
  r.channels = color ? 3 : 1;
  r.samples.resize(buffer.size());
  for (std::size_t i = 0; i < buffer.size(); ++i) r.samples[i] = buffer[i] / 255.0;
  return r;
}

RawRaster read_raster(const std::filesystem::path& path) {
  const std::string data = read_text_file(path);
  static constexpr unsigned char kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (data.size() >= 8 && std::memcmp(data.data(), kPngSig, 8) == 0) return read_png(path);
  return PnmReader(data, path).read();
}

int quantise(double v, int maxval) {
  const double c = std::clamp(std::isfinite(v) ? v : 0.0, 0.0, 1.0);
  return static_cast<int>(std::lround(c * maxval));
}

void write_pnm(const std::filesystem::path& path, const std::array<const Image*, 3>& planes, std::size_t channels,
               PnmEncoding encoding, int maxval) {
  if (maxval < 1 || maxval > 65535) throw InvalidArgument("maxval must lie in 1..65535");
  const Image& first = *planes[0];
  if (first.empty()) throw InvalidArgument("cannot write an empty image");
  const bool binary = encoding == PnmEncoding::Binary;
  const char type = channels == 1 ? (binary ? '5' : '2') : (binary ? '6' : '3');
  std::ostringstream out;
  out << 'P' << type << '\n' << first.width() << ' ' << first.height() << '\n' << maxval << '\n';
  for (std::size_t y = 0; y < first.height(); ++y) {
    for (std::size_t x = 0; x < first.width(); ++x) {
      for (std::size_t c = 0; c < channels; ++c) {
        const int q = quantise((*planes[c])(x, y), maxval);
        if (binary) {
          if (maxval > 255) out.put(static_cast<char>((q >> 8) & 0xFF));
          out.put(static_cast<char>(q & 0xFF));
        } else {
          out << q << ((x + 1 == first.width() && c + 1 == channels) ? '\n' : ' ');
        }
      }
    }
  }
  write_text_file(path, out.str());
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail(path, "cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) io_fail(path, "cannot read");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) io_fail(path, "cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) io_fail(path, "cannot write");
}

Image read_gray(const std::filesystem::path& path) {
  const RawRaster r = read_raster(path);
  Image img(r.width, r.height);
  auto px = img.values();
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (r.channels == 1) {
      px[i] = r.samples[i];
    } else {
      px[i] = 0.299 * r.samples[3 * i] + 0.587 * r.samples[3 * i + 1] + 0.114 * r.samples[3 * i + 2];
    }
  }
  return img;
}

ColorImage read_color(const std::filesystem::path& path) {
  const RawRaster r = read_raster(path);
  ColorImage img;
  for (auto& c : img.channels) c = Image(r.width, r.height);
  const std::size_t n = r.width * r.height;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < 3; ++c) {
      img.channels[c].values()[i] = r.channels == 1 ? r.samples[i] : r.samples[3 * i + c];
    }
  }
  return img;
}

void write_pgm(const std::filesystem::path& path, const Image& img, PnmEncoding encoding, int maxval) {
  write_pnm(path, {&img, &img, &img}, 1, encoding, maxval);
}

void write_ppm(const std::filesystem::path& path, const ColorImage& img, PnmEncoding encoding, int maxval) {
  img.validate();
  write_pnm(path, {&img.channels[0], &img.channels[1], &img.channels[2]}, 3, encoding, maxval);
}

void write_display_pgm(const std::filesystem::path& path, const Image& img) {
  write_pgm(path, normalize_min_max(img));
}

void write_matrix_csv(const std::filesystem::path& path, const Image& img, const std::string& comment) {
  std::string out;
  out += "# " + (comment.empty() ? std::string("matrix") : comment) + " width=" + std::to_string(img.width()) +
         " height=" + std::to_string(img.height()) + "\n";
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (x) out += ',';
      out += detail::format_double(img(x, y));
    }
    out += '\n';
  }
  write_text_file(path, out);
}

Image read_matrix_csv(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::vector<double> values;
  std::size_t width = 0;
  std::size_t height = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto trimmed = detail::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = trimmed.find(',', start);
      values.push_back(detail::parse_double(trimmed.substr(start, comma - start), "matrix value"));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (width == 0) width = count;
    if (count != width) throw ParseError(describe(path) + ": ragged matrix row " + std::to_string(height + 1));
    ++height;
  }
  if (width == 0) throw ParseError(describe(path) + ": empty matrix");
  return Image(width, height, std::move(values));
}

}  // namespace fspi
