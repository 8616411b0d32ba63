#include <doctest.h>

#include <algorithm>

#include "fspi/error.hpp"
#include "fspi/scenes.hpp"

using namespace fspi;

TEST_SUITE("scenes") {
  TEST_CASE("every scene is deterministic and lies in [0, 1]") {
    for (const char* name : {"blobs", "chart", "logo", "logo:FSPI", "texture", "peppers"}) {
      const Image a = make_scene(name, 40, 30, 3);
      const Image b = make_scene(name, 40, 30, 3);
      CHECK(a.width() == 40);
      CHECK(a.height() == 30);
      CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
      const auto [lo, hi] = std::minmax_element(a.values().begin(), a.values().end());
      CHECK(*lo >= 0.0);
      CHECK(*hi <= 1.0);
      CHECK(*hi > *lo);
    }
  }

  TEST_CASE("seeds change seeded scenes") {
    const Image a = texture_1f(16, 16, 1);
    const Image b = texture_1f(16, 16, 2);
    CHECK_FALSE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  }

  TEST_CASE("color peppers has three distinct channels") {
    const ColorImage c = make_color_scene("peppers", 32, 32, 1);
    CHECK_NOTHROW(c.validate());
    CHECK_FALSE(std::equal(c.channels[0].values().begin(), c.channels[0].values().end(),
                           c.channels[1].values().begin()));
  }

  TEST_CASE("bad requests are rejected") {
    CHECK_THROWS_AS(make_scene("moon", 8, 8), InvalidArgument);
    CHECK_THROWS_AS(text_logo(8, 8, "a~b"), InvalidArgument);
    CHECK_THROWS_AS(blob_phantom(0, 8), InvalidArgument);
  }
}
