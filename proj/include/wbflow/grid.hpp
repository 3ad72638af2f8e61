#pragma once

#include <string>
#include <vector>

namespace wbflow {

enum class Geometry { cartesian, cylindrical, spherical };

Geometry geometry_from_string(const std::string& s);
std::string to_string(Geometry g);

/// Uniform 1D mesh with two ghost cells per side.
///
/// All per-cell arrays are indexed with padded indices c in [0, n_total());
/// interior cells occupy [n_ghost, n_ghost + n_cells). interface(c) is the
/// left face of padded cell c, so cell c spans [interface(c), interface(c+1)].
/// Face areas are stored once per interface; both adjacent cells see the same
/// value, which lets flux differences telescope exactly.
struct Grid1D {
  Geometry geometry = Geometry::cartesian;
  double x_min = 0.0, x_max = 0.0, dx = 0.0;
  int n_cells = 0;
  static constexpr int n_ghost = 2;

  std::vector<double> center;     // n_total()
  std::vector<double> iface;      // n_total() + 1
  std::vector<double> volume;     // n_total(); meaningful on interior
  std::vector<double> inv_volume; // n_total(); meaningful on interior
  std::vector<double> area;       // n_total() + 1

  int n_total() const { return n_cells + 2 * n_ghost; }
  int begin() const { return n_ghost; }              // first interior cell
  int end() const { return n_ghost + n_cells; }      // one past last interior
  int alpha() const {
    return geometry == Geometry::cartesian ? 0 : (geometry == Geometry::cylindrical ? 1 : 2);
  }
};

Grid1D build_grid_1d(Geometry geometry, double x_min, double x_max, int n_cells);

/// Uniform 2D Cartesian mesh, two ghost cells per side in each direction.
struct Grid2D {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  double dx = 0.0, dy = 0.0;
  int nx = 0, ny = 0;
  static constexpr int n_ghost = 2;

  std::vector<double> xc;  // nx + 4 cell centers
  std::vector<double> yc;  // ny + 4
  std::vector<double> xf;  // nx + 5 face coordinates, shared by adjacent cells
  std::vector<double> yf;  // ny + 5

  int nx_total() const { return nx + 2 * n_ghost; }
  int ny_total() const { return ny + 2 * n_ghost; }
};

Grid2D build_grid_2d(double x_min, double x_max, int nx, double y_min, double y_max, int ny);

}  // namespace wbflow
