#include "wbflow/grid.hpp"

#include <cmath>

#include "wbflow/errors.hpp"

namespace wbflow {

Geometry geometry_from_string(const std::string& s) {
  if (s == "cartesian") return Geometry::cartesian;
  if (s == "cylindrical") return Geometry::cylindrical;
  if (s == "spherical") return Geometry::spherical;
  throw ConfigError("unknown geometry: " + s);
}

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::cartesian: return "cartesian";
    case Geometry::cylindrical: return "cylindrical";
    default: return "spherical";
  }
}

Grid1D build_grid_1d(Geometry geometry, double x_min, double x_max, int n_cells) {
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw ConfigError("grid: require x_max > x_min");
  }
  if (n_cells < 1) {
    throw ConfigError("grid: require n_cells >= 1");
  }

  Grid1D g;
  g.geometry = geometry;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.dx = (x_max - x_min) / n_cells;

  if (geometry != Geometry::cartesian && !(x_min > 0.0)) {
    throw ConfigError("grid: curvilinear geometry requires x_min > 0");
  }

  const int nt = g.n_total();
  g.center.resize(nt);
  g.iface.resize(nt + 1);
  g.volume.resize(nt, 0.0);
  g.inv_volume.resize(nt, 0.0);
  g.area.resize(nt + 1);

  for (int c = 0; c <= nt; ++c) {
    g.iface[c] = x_min + (c - Grid1D::n_ghost) * g.dx;
  }
  // Anchor the outer boundary exactly.
  g.iface[Grid1D::n_ghost + n_cells] = x_max;

  constexpr double two_pi = 2.0 * 3.14159265358979323846;
  constexpr double four_pi = 4.0 * 3.14159265358979323846;
  for (int c = 0; c <= nt; ++c) {
    const double r = g.iface[c];
    switch (geometry) {
      case Geometry::cartesian: g.area[c] = 1.0; break;
      case Geometry::cylindrical: g.area[c] = two_pi * r; break;
      case Geometry::spherical: g.area[c] = four_pi * r * r; break;
    }
  }
  for (int c = 0; c < nt; ++c) {
    const double xl = g.iface[c], xr = g.iface[c + 1];
    g.center[c] = 0.5 * (xl + xr);
    switch (geometry) {
      case Geometry::cartesian:
        g.volume[c] = xr - xl;
        break;
      case Geometry::cylindrical:
        g.volume[c] = two_pi * (xr * xr - xl * xl) / 2.0;
        break;
      case Geometry::spherical:
        g.volume[c] = four_pi / 3.0 * (xr * xr * xr - xl * xl * xl);
        break;
    }
    g.inv_volume[c] = 1.0 / g.volume[c];
  }
  return g;
}

Grid2D build_grid_2d(double x_min, double x_max, int nx, double y_min, double y_max, int ny) {
  if (!(x_max > x_min) || !(y_max > y_min)) {
    throw ConfigError("grid2d: require x_max > x_min and y_max > y_min");
  }
  if (nx < 1 || ny < 1) {
    throw ConfigError("grid2d: require nx, ny >= 1");
  }
  Grid2D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.y_min = y_min;
  g.y_max = y_max;
  g.nx = nx;
  g.ny = ny;
  g.dx = (x_max - x_min) / nx;
  g.dy = (y_max - y_min) / ny;
  g.xc.resize(g.nx_total());
  g.yc.resize(g.ny_total());
  g.xf.resize(g.nx_total() + 1);
  g.yf.resize(g.ny_total() + 1);
  for (int i = 0; i < g.nx_total(); ++i) {
    g.xc[i] = x_min + (i - Grid2D::n_ghost + 0.5) * g.dx;
  }
  for (int j = 0; j < g.ny_total(); ++j) {
    g.yc[j] = y_min + (j - Grid2D::n_ghost + 0.5) * g.dy;
  }
  for (int i = 0; i <= g.nx_total(); ++i) {
    g.xf[i] = x_min + (i - Grid2D::n_ghost) * g.dx;
  }
  for (int j = 0; j <= g.ny_total(); ++j) {
    g.yf[j] = y_min + (j - Grid2D::n_ghost) * g.dy;
  }
  return g;
}

}  // namespace wbflow
