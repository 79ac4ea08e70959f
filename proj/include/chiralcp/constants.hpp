#pragma once

// SI physical constants shared by all modules. All frequencies in this
// library are angular (rad/s).

namespace chiralcp {

struct Constants {
  double hbar; // J s
  double c;    // m/s
  double eps0; // F/m
  double mu0;  // H/m
  double z0;   // Ohm, vacuum impedance sqrt(mu0/eps0)
};

// CODATA 2018 values (exact where the SI defines them so).
inline constexpr Constants si_constants() {
  constexpr double hbar = 1.054571817e-34;
  constexpr double c = 299792458.0;
  constexpr double mu0 = 1.25663706212e-6;
  constexpr double eps0 = 8.8541878128e-12;
  return Constants{hbar, c, eps0, mu0, mu0 * c};
}

} // namespace chiralcp
