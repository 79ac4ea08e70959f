#pragma once

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "chiralcp/potential.hpp"

namespace chiralcp {

// Molecule in free space between two half-spaces. Coordinate origin at the
// cavity center, left wall at -gap_width/2. The walls usually differ only
// in the sign of the Condon strength a.
struct CavityConfig {
  double gap_width;         // m
  ChiralMedium left_medium;
  ChiralMedium right_medium;
  Molecule molecule;
  std::size_t grid = 200;   // number of z samples
  double wall_margin = 1e-9; // m, excluded near each wall
};

// One row of a cavity scan. Forces are in the global frame: positive
// toward increasing z (toward the right wall).
struct CavityPoint {
  double z;         // m, from cavity center
  double f_e_left;  // N
  double f_e_right;
  double f_e_total;
  double f_c_left;
  double f_c_right;
  double f_c_total;
  double u_e_total; // J
  double u_c_total;
};

struct CavityScan {
  std::vector<CavityPoint> points;
};

// Sweeps the molecule across the gap, evaluating each wall independently
// and adding the forces; multiple reflections between the walls are not
// included. A wall's "away from interface" force maps to +z for the left
// wall and -z for the right wall. Grid points are independent and run on
// `jobs` worker threads, assembled in grid order.
inline CavityScan scan(const CavityConfig& config, const QuadratureSpec& spec,
                       std::size_t jobs = 1) {
  if (!(config.gap_width > 0.0))
    throw std::invalid_argument("gap_width must be positive");
  if (config.grid < 3)
    throw std::invalid_argument("grid must have at least 3 points");
  check_molecule(config.molecule);
  const double half = 0.5 * config.gap_width;
  const double lo = -half + config.wall_margin;
  const double hi = half - config.wall_margin;
  if (!(lo < hi))
    throw std::invalid_argument("wall margin leaves no interior");

  CavityScan out;
  out.points.resize(config.grid);
  const double step = (hi - lo) / static_cast<double>(config.grid - 1);

  auto eval_point = [&](std::size_t i) {
    const double z = lo + step * static_cast<double>(i);
    const double d_left = z + half;
    const double d_right = half - z;
    CavityPoint& p = out.points[i];
    p.z = z;
    try {
      const PotentialBreakdown ul = u_nonretarded_halfspace(
          config.left_medium, config.molecule, d_left, spec);
      const PotentialBreakdown ur = u_nonretarded_halfspace(
          config.right_medium, config.molecule, d_right, spec);
      // Non-retarded 1/d^3 scaling gives F = 3U/d per component.
      p.f_e_left = 3.0 * ul.u_electric() / d_left;
      p.f_e_right = -3.0 * ur.u_electric() / d_right;
      p.f_c_left = 3.0 * ul.u_chiral() / d_left;
      p.f_c_right = -3.0 * ur.u_chiral() / d_right;
      p.f_e_total = p.f_e_left + p.f_e_right;
      p.f_c_total = p.f_c_left + p.f_c_right;
      p.u_e_total = ul.u_electric() + ur.u_electric();
      p.u_c_total = ul.u_chiral() + ur.u_chiral();
    } catch (const std::exception& e) {
      throw std::runtime_error("cavity scan failed at z = " +
                               std::to_string(z) + " m (" + e.what() + ")");
    }
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < config.grid; ++i)
      eval_point(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.grid)
        return;
      try {
        eval_point(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error)
          first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(jobs, config.grid); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  if (first_error)
    std::rethrow_exception(first_error);
  return out;
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
  double width() const { return empty ? 0.0 : hi - lo; }
};

// Maximal contiguous interval around the electric-force zero crossing in
// which the chiral total force exceeds the electric one in magnitude.
inline Interval dominance_region(const CavityScan& s) {
  const auto& pts = s.points;
  if (pts.empty())
    return Interval{};
  // Anchor: grid point nearest the sign change of f_e_total, falling back
  // to the smallest |f_e_total|.
  std::size_t anchor = 0;
  bool found = false;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].f_e_total == 0.0 ||
        (pts[i].f_e_total < 0.0) != (pts[i + 1].f_e_total < 0.0)) {
      anchor = i;
      found = true;
      break;
    }
  }
  if (!found) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (std::abs(pts[i].f_e_total) < best) {
        best = std::abs(pts[i].f_e_total);
        anchor = i;
      }
    }
  }
  auto dominant = [&](std::size_t i) {
    return std::abs(pts[i].f_c_total) > std::abs(pts[i].f_e_total);
  };
  if (!dominant(anchor)) {
    if (anchor + 1 < pts.size() && dominant(anchor + 1))
      ++anchor;
    else
      return Interval{};
  }
  std::size_t lo = anchor, hi = anchor;
  while (lo > 0 && dominant(lo - 1))
    --lo;
  while (hi + 1 < pts.size() && dominant(hi + 1))
    ++hi;
  return Interval{pts[lo].z, pts[hi].z, false};
}

// |F_e_total| / |F_c_total| at z, linearly interpolated between samples.
// Returns +inf when the chiral force vanishes.
inline double magnitude_ratio(const CavityScan& s, double z) {
  const auto& pts = s.points;
  if (pts.size() < 2 || z < pts.front().z || z > pts.back().z)
    throw std::out_of_range("magnitude_ratio: z outside scan range");
  std::size_t i = 0;
  while (i + 2 < pts.size() && pts[i + 1].z < z)
    ++i;
  const double t = (z - pts[i].z) / (pts[i + 1].z - pts[i].z);
  const double fe = pts[i].f_e_total + t * (pts[i + 1].f_e_total - pts[i].f_e_total);
  const double fc = pts[i].f_c_total + t * (pts[i + 1].f_c_total - pts[i].f_c_total);
  if (fc == 0.0)
    return std::numeric_limits<double>::infinity();
  return std::abs(fe) / std::abs(fc);
}

} // namespace chiralcp
