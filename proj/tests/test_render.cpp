#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "alphakit/render.hpp"

using namespace alphakit;
using std::numbers::pi;

TEST_CASE("colour_of hue encoding") {
  CHECK(colour_of(Complex(1.0, 0.0)) == Rgb{255, 0, 0});
  CHECK(colour_of(Complex(0.0, 1.0)) == Rgb{128, 255, 0});
  CHECK(colour_of(Complex(-1.0, 0.0)) == Rgb{0, 255, 255});
  CHECK(colour_of(Complex(0.0, -1.0)) == Rgb{128, 0, 255});
  CHECK(colour_of(Complex(0.0, 0.0)) == Rgb{0, 0, 0});
  // Value saturates at |u| = 1.
  CHECK(colour_of(Complex(3.0, 0.0)) == Rgb{255, 0, 0});
  CHECK(colour_of(Complex(0.5, 0.0)) == Rgb{128, 0, 0});
  CHECK(colour_of(std::polar(1.0, -1e-17)) == Rgb{255, 0, 0});
}

TEST_CASE("PPM layout") {
  Image img(3, 2);
  img.set(2, 1, {1, 2, 3});
  CHECK(img.at(2, 1) == Rgb{1, 2, 3});
  CHECK(img.at(0, 0) == Rgb{0, 0, 0});
  const std::string ppm = img.to_ppm();
  const std::string header = "P6\n3 2\n255\n";
  CHECK(ppm.rfind(header, 0) == 0);
  CHECK(ppm.size() == header.size() + 18);
  CHECK(ppm.substr(ppm.size() - 3) == std::string("\x01\x02\x03", 3));
}

TEST_CASE("convex_hull of a square with interior and collinear points") {
  const auto hull = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}, {0.2, 0.7}});
  REQUIRE(hull.size() == 4);
  double area = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto a = hull[i];
    const auto b = hull[(i + 1) % hull.size()];
    area += a.real() * b.imag() - b.real() * a.imag();
  }
  CHECK(area / 2 == doctest::Approx(1.0));  // positive: counter-clockwise
  CHECK(convex_hull({}).empty());
}

TEST_CASE("disk_image places samples by their cell centres") {
  const int n = 16;
  const std::vector<GridSample> samples{{grid_point(n, 0, 0), Complex(1.0, 0.0)},
                                        {grid_point(n, 5, 11), Complex(-1.0, 0.0)}};
  const auto img = disk_image(n, samples);
  CHECK(img.at(0, 0) == Rgb{255, 0, 0});
  CHECK(img.at(11, 5) == Rgb{0, 255, 255});
  CHECK(img.at(5, 11) == Rgb{0, 0, 0});
}

TEST_CASE("scatter_image marks image points") {
  const auto img = scatter_image({{Complex(0.0, 0.0), Complex(0.0, 0.0)}, {Complex(0.0, 0.0), Complex(5.0, 0.0)}}, 100);
  CHECK(img.at(50, 50) == Rgb{255, 255, 255});
  int lit = 0;
  for (int y = 0; y < 100; ++y)
    for (int x = 0; x < 100; ++x) lit += img.at(x, y)[0] == 255;
  CHECK(lit == 1);
}

TEST_CASE("render of constant boundary data is uniformly red inside the disk") {
  const auto r = render(AlphaParameter(0.5), BoundaryFunction::trig_poly({{0, Complex(1.0, 0.0)}}), 16);
  REQUIRE_FALSE(r.samples.empty());
  for (const auto& s : r.samples) CHECK(std::abs(s.u - 1.0) <= 1e-10);
  CHECK(r.max_modulus == doctest::Approx(1.0));
  CHECK(r.disk.at(8, 8) == Rgb{255, 0, 0});
  CHECK(r.disk.at(0, 0) == Rgb{0, 0, 0});
  const auto csv = grid_csv(r.samples);
  CHECK(csv.rfind("z_re,z_im,u_re,u_im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.samples.size()) + 1);
  CHECK_THROWS_AS(render(AlphaParameter(0.5), BoundaryFunction::trig_poly({{0, Complex(1.0, 0.0)}}), 8),
                  std::invalid_argument);
}

TEST_CASE("render of the identity stays inside the disk and fills it") {
  const auto r = render(AlphaParameter(0.0), BoundaryFunction::trig_poly({{1, Complex(1.0, 0.0)}}), 32);
  for (const auto& s : r.samples) CHECK(std::abs(s.u - s.z) <= 1e-10);
  CHECK(r.max_modulus < 1.0);
}
