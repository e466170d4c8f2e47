#pragma once

// Disk images of alpha-harmonic mappings as binary PPM (P6).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "alphakit/alphamap.hpp"

namespace alphakit {

using Rgb = std::array<std::uint8_t, 3>;

/// HSV with hue = (arg(u) mod 2pi) * 180/pi degrees (arg 0 is red, pi/2
/// chartreuse-green, pi cyan), saturation 1, value = min(|u|, 1).
Rgb colour_of(Complex u);

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel

  Image(int w, int h) : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3, 0) {}
  void set(int x, int y, Rgb c);
  Rgb at(int x, int y) const;
  std::string to_ppm() const;
};

/// One pixel per grid cell, black outside the evaluated disk.
Image disk_image(int grid_n, const std::vector<GridSample>& samples);

inline constexpr double kScatterExtent = 1.25;

/// White dots for the image points u on black, over [-1.25, 1.25]^2.
Image scatter_image(const std::vector<GridSample>& samples, int size = 512);

/// Counter-clockwise convex hull; collinear points dropped.
std::vector<Complex> convex_hull(std::vector<Complex> points);

/// Header z_re,z_im,u_re,u_im then one row per sample.
std::string grid_csv(const std::vector<GridSample>& samples);

struct RenderResult {
  std::vector<GridSample> samples;
  Image disk{0, 0};
  Image scatter{0, 0};
  double max_modulus = 0.0;
};

/// grid_n must be at least 16.
RenderResult render(AlphaParameter alpha, const BoundaryFunction& b, int grid_n,
                    const EvalPolicy& policy = {}, const SolverOptions& options = {});

}  // namespace alphakit
