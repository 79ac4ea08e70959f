#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chiralcp/constants.hpp"

namespace chiralcp {

// One molecular transition relative to the initial state n. omega_kn is
// signed: negative for transitions downward in energy, which are the only
// contributors to resonant terms.
struct Transition {
  double omega_kn;  // rad/s, signed
  double dipole_sq; // (C m)^2, |d_nk|^2
  double rotatory;  // C^2 m^3 / s, R_nk, signed
};

struct Molecule {
  std::vector<Transition> transitions;
};

inline void check_molecule(const Molecule& mol) {
  if (mol.transitions.empty())
    throw std::invalid_argument("molecule has no transitions");
  for (const auto& t : mol.transitions) {
    if (t.omega_kn == 0.0)
      throw std::invalid_argument("transition frequency must be nonzero");
    if (t.dipole_sq < 0.0)
      throw std::invalid_argument("dipole strength must be non-negative");
  }
}

// Isotropic electric polarizability at imaginary frequency,
//   alpha(i*xi) = (2/3hbar) sum_k omega_kn |d_nk|^2 / (omega_kn^2 + xi^2).
// Negative contributions arise from downward transitions of excited
// initial states.
inline double alpha_iso(const Molecule& mol, double xi) {
  const double hbar = si_constants().hbar;
  double sum = 0.0;
  for (const auto& t : mol.transitions)
    sum += t.omega_kn * t.dipole_sq / (t.omega_kn * t.omega_kn + xi * xi);
  return 2.0 / (3.0 * hbar) * sum;
}

// Isotropic cross-polarizability at imaginary frequency,
//   Gamma(i*xi) = -(2/3hbar) sum_k xi R_nk / (omega_kn^2 + xi^2).
inline double gamma_iso(const Molecule& mol, double xi) {
  const double hbar = si_constants().hbar;
  double sum = 0.0;
  for (const auto& t : mol.transitions)
    sum += xi * t.rotatory / (t.omega_kn * t.omega_kn + xi * xi);
  return -2.0 / (3.0 * hbar) * sum;
}

// Slope of Gamma at xi = 0, used by the retarded closed form.
inline double gamma_iso_slope0(const Molecule& mol) {
  const double hbar = si_constants().hbar;
  double sum = 0.0;
  for (const auto& t : mol.transitions)
    sum += t.rotatory / (t.omega_kn * t.omega_kn);
  return -2.0 / (3.0 * hbar) * sum;
}

// Transitions with omega_kn < 0, the only ones passing the resonant step
// function.
inline std::vector<Transition> downward_transitions(const Molecule& mol) {
  std::vector<Transition> out;
  for (const auto& t : mol.transitions)
    if (t.omega_kn < 0.0)
      out.push_back(t);
  return out;
}

inline bool is_ground_state(const Molecule& mol) {
  for (const auto& t : mol.transitions)
    if (t.omega_kn < 0.0)
      return false;
  return true;
}

// Swap a molecule for its enantiomer: every rotatory strength changes
// sign, everything else is untouched.
inline Molecule mirror(const Molecule& mol) {
  Molecule out = mol;
  for (auto& t : out.transitions)
    t.rotatory = -t.rotatory;
  return out;
}

// Dimethyl disulphide, first transition at 90 degree dihedral angle.
inline constexpr double kDmdsOmega = 9.17e15;      // rad/s
inline constexpr double kDmdsDipoleSq = 8.264e-60; // (C m)^2
inline constexpr double kDmdsRotatory = 3.328e-64; // C^2 m^3 / s

// Two-level dimethyl disulphide example. Ground variant has the single
// transition upward, excited variant downward.
inline Molecule dmds_example(bool excited = false) {
  const double sign = excited ? -1.0 : 1.0;
  return Molecule{{Transition{sign * kDmdsOmega, kDmdsDipoleSq, kDmdsRotatory}}};
}

} // namespace chiralcp
