#include "alphakit/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alphakit/report.hpp"

namespace alphakit {

Rgb colour_of(Complex u) {
  double arg = std::arg(u);
  if (arg < 0.0) arg += 2.0 * std::numbers::pi;
  const double h = std::fmod(arg * 3.0 / std::numbers::pi, 6.0);  // sector in [0, 6)
  const double v = std::min(std::abs(u), 1.0);
  const int sector = std::min(static_cast<int>(h), 5);
  const double f = h - sector;
  const double p = 0.0;
  const double q = v * (1.0 - f);
  const double t = v * f;
  double r = 0, g = 0, bl = 0;
  switch (sector) {
    case 0: r = v; g = t; bl = p; break;
    case 1: r = q; g = v; bl = p; break;
    case 2: r = p; g = v; bl = t; break;
    case 3: r = p; g = q; bl = v; break;
    case 4: r = t; g = p; bl = v; break;
    default: r = v; g = p; bl = q; break;
  }
  auto byte = [](double c) { return static_cast<std::uint8_t>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0)); };
  return {byte(r), byte(g), byte(bl)};
}

void Image::set(int x, int y, Rgb c) {
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  rgb[i] = c[0];
  rgb[i + 1] = c[1];
  rgb[i + 2] = c[2];
}

Rgb Image::at(int x, int y) const {
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  return {rgb[i], rgb[i + 1], rgb[i + 2]};
}

std::string Image::to_ppm() const {
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  return out;
}

Image disk_image(int grid_n, const std::vector<GridSample>& samples) {
  Image img(grid_n, grid_n);
  // Recover (row, col) from the cell centre.
  for (const auto& s : samples) {
    const int col = static_cast<int>(std::floor((s.z.real() + 1.0) * grid_n / 2.0));
    const int row = static_cast<int>(std::floor((1.0 - s.z.imag()) * grid_n / 2.0));
    if (col < 0 || col >= grid_n || row < 0 || row >= grid_n) continue;
    img.set(col, row, colour_of(s.u));
  }
  return img;
}

Image scatter_image(const std::vector<GridSample>& samples, int size) {
  Image img(size, size);
  for (const auto& s : samples) {
    const double x = (s.u.real() + kScatterExtent) / (2.0 * kScatterExtent) * size;
    const double y = (kScatterExtent - s.u.imag()) / (2.0 * kScatterExtent) * size;
    if (!(x >= 0.0 && x < size && y >= 0.0 && y < size)) continue;
    img.set(static_cast<int>(x), static_cast<int>(y), {255, 255, 255});
  }
  return img;
}

std::vector<Complex> convex_hull(std::vector<Complex> points) {
  auto less = [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  std::sort(points.begin(), points.end(), less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  auto cross = [](Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
  };
  std::vector<Complex> hull(2 * points.size());
  std::size_t n = 0;
  for (const auto& p : points) {
    while (n >= 2 && cross(hull[n - 2], hull[n - 1], p) <= 0.0) --n;
    hull[n++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = n + 1; i-- > 0;) {
    while (n >= lower && cross(hull[n - 2], hull[n - 1], points[i]) <= 0.0) --n;
    hull[n++] = points[i];
  }
  hull.resize(n - 1);
  return hull;
}

std::string grid_csv(const std::vector<GridSample>& samples) {
  std::string out = "z_re,z_im,u_re,u_im\n";
  for (const auto& s : samples) {
    out += format_double(s.z.real()) + ',' + format_double(s.z.imag()) + ',' +
           format_double(s.u.real()) + ',' + format_double(s.u.imag()) + '\n';
  }
  return out;
}

RenderResult render(AlphaParameter alpha, const BoundaryFunction& b, int grid_n,
                    const EvalPolicy& policy, const SolverOptions& options) {
  if (grid_n < 16) throw std::invalid_argument("render needs grid_n >= 16");
  RenderResult r;
  r.samples = solve_grid(alpha, b, grid_n, policy, options);
  r.disk = disk_image(grid_n, r.samples);
  r.scatter = scatter_image(r.samples);
  for (const auto& s : r.samples) r.max_modulus = std::max(r.max_modulus, std::abs(s.u));
  return r;
}

}  // namespace alphakit
