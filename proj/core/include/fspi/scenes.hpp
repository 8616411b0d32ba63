#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fspi/image.hpp"

namespace fspi {

/// Deterministic synthetic test scenes with values in [0, 1].

/// Sum of smooth Gaussian blobs with seeded centres, widths and amplitudes.
Image blob_phantom(std::size_t width, std::size_t height, std::uint64_t seed = 1);

/// Resolution target: bar groups of decreasing period, a radial star and a ring.
Image resolution_chart(std::size_t width, std::size_t height);

/// Text rendered with a 5x7 bitmap font, scaled to fit and centred on a dark background.
/// Supports A-Z, 0-9 and space.
Image text_logo(std::size_t width, std::size_t height, std::string_view text = "BNU");

/// Isotropic 1/f noise with seeded random phases, rescaled to [0, 1].
Image texture_1f(std::size_t width, std::size_t height, std::uint64_t seed = 1);

/// Shaded overlapping ellipses with soft edges and a little texture, a stand-in for a natural photo.
Image peppers_like(std::size_t width, std::size_t height, std::uint64_t seed = 1);

/// Color version of peppers_like with distinct per-channel reflectances.
ColorImage peppers_like_color(std::size_t width, std::size_t height, std::uint64_t seed = 1);

/// Names accepted by make_scene: blobs, chart, logo, logo:<TEXT>, texture, peppers.
std::vector<std::string> scene_names();

/// Builds a scene by name. Throws InvalidArgument on an unknown name.
Image make_scene(std::string_view name, std::size_t width, std::size_t height, std::uint64_t seed = 1);

/// peppers gives peppers_like_color; other names replicate the gray scene.
ColorImage make_color_scene(std::string_view name, std::size_t width, std::size_t height, std::uint64_t seed = 1);

}  // namespace fspi
