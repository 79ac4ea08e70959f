#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chiralcp/constants.hpp"
#include "chiralcp/material.hpp"
#include "chiralcp/molecule.hpp"
#include "chiralcp/quadrature.hpp"
#include "chiralcp/reflection.hpp"

namespace chiralcp {

// Electric/chiral x off-resonant/resonant decomposition at one position.
// Resonant parts are zero for ground-state molecules.
struct PotentialBreakdown {
  double u_electric_offres = 0.0; // J
  double u_electric_res = 0.0;    // J
  double u_chiral_offres = 0.0;   // J
  double u_chiral_res = 0.0;      // J

  double u_electric() const { return u_electric_offres + u_electric_res; }
  double u_chiral() const { return u_chiral_offres + u_chiral_res; }
  double total() const { return u_electric() + u_chiral(); }
};

// Same decomposition for the force, sign positive away from the interface
// (toward increasing z).
struct ForceBreakdown {
  double f_electric_offres = 0.0; // N
  double f_electric_res = 0.0;    // N
  double f_chiral_offres = 0.0;   // N
  double f_chiral_res = 0.0;      // N

  double f_electric() const { return f_electric_offres + f_electric_res; }
  double f_chiral() const { return f_chiral_offres + f_chiral_res; }
  double total() const { return f_electric() + f_chiral(); }
};

// Quadrature spec with the stretch scale pinned to the molecule's dominant
// transition frequency, where the susceptibilities peak.
inline QuadratureSpec default_xi_spec(const Molecule& mol) {
  QuadratureSpec spec;
  double wmax = 0.0;
  for (const auto& t : mol.transitions)
    wmax = std::max(wmax, std::abs(t.omega_kn));
  spec.scale = wmax;
  return spec;
}

namespace detail {

inline void require_positive_distance(double z) {
  if (!(z > 0.0))
    throw std::invalid_argument("distance z must be positive");
}

inline void require_ground_state(const Molecule& mol) {
  if (!is_ground_state(mol))
    throw std::invalid_argument("operation requires a ground-state molecule");
}

inline double handedness_sign(Handedness h) {
  return (h == Handedness::RightHanded) ? 1.0 : -1.0;
}

} // namespace detail

// Chiral potential of a ground-state molecule facing a perfect chiral
// mirror,
//   U(z) = +/- hbar*Z0/(8 pi^2 z^3)
//          * int_0^inf Gamma(i xi) exp(-2 xi z / c) (2 xi z / c + 1) dxi,
// upper sign for the right-handed mirror.
inline double u_chiral_perfect_mirror(Handedness h, const Molecule& mol,
                                      double z, const QuadratureSpec& spec) {
  detail::require_positive_distance(z);
  detail::require_ground_state(mol);
  const Constants k = si_constants();
  const double pref = detail::handedness_sign(h) * k.hbar * k.z0 /
                      (8.0 * M_PI * M_PI * z * z * z);
  const IntegralResult r = integrate_semiinfinite(
      [&](double xi) {
        const double u = 2.0 * xi * z / k.c;
        return gamma_iso(mol, xi) * std::exp(-u) * (u + 1.0);
      },
      spec);
  return pref * r.value;
}

// Retarded (large-distance) closed form of the perfect-mirror potential,
//   U(z) = -/+ Z0 c^2/(16 pi^2 z^5) * sum_k R_0k / omega_k0^2.
inline double u_chiral_retarded_limit(const Molecule& mol, double z,
                                      Handedness h) {
  detail::require_positive_distance(z);
  detail::require_ground_state(mol);
  const Constants k = si_constants();
  double sum = 0.0;
  for (const auto& t : mol.transitions)
    sum += t.rotatory / (t.omega_kn * t.omega_kn);
  return -detail::handedness_sign(h) * k.z0 * k.c * k.c /
         (16.0 * M_PI * M_PI * std::pow(z, 5)) * sum;
}

// Non-retarded (close-distance) closed form,
//   U(z) = +/- Z0/(12 pi^2 z^3) * sum_k R_0k ln(omega_k0 z / c).
inline double u_chiral_nonretarded_limit(const Molecule& mol, double z,
                                         Handedness h) {
  detail::require_positive_distance(z);
  detail::require_ground_state(mol);
  const Constants k = si_constants();
  double sum = 0.0;
  for (const auto& t : mol.transitions)
    sum += t.rotatory * std::log(t.omega_kn * z / k.c);
  return detail::handedness_sign(h) * k.z0 /
         (12.0 * M_PI * M_PI * z * z * z) * sum;
}

// Off-resonant chiral potential from the general scattering integral,
//   U(z) = hbar*mu0/(4 pi^2 c) * int_0^inf dxi Gamma(i xi)
//          * int_{xi/c}^inf dk exp(-2 k z)
//            [ (2 k^2 c^2 - xi^2) R_sp(i xi) + xi^2 R_ps(i xi) ],
// with the xi^2 factor folded into the wavevector integrand so nothing is
// singular at xi = 0. At imaginary frequency all coefficients are real.
inline double u_chiral_general_offres(const ReflectionProvider& provider,
                                      const Molecule& mol, double z,
                                      const QuadratureSpec& spec) {
  detail::require_positive_distance(z);
  const Constants kc = si_constants();
  const double c = kc.c;
  const double pref = kc.hbar * kc.mu0 / (4.0 * M_PI * M_PI * c);
  QuadratureSpec inner = spec;
  const IntegralResult r = integrate_semiinfinite(
      [&](double xi) {
        const double g = gamma_iso(mol, xi);
        if (g == 0.0)
          return 0.0;
        const ReflectionSet refl = reflection_at_imag(provider, xi);
        const double rsp = refl.rsp.real();
        const double rps = refl.rps.real();
        if (rsp == 0.0 && rps == 0.0)
          return 0.0;
        const double xi2 = xi * xi;
        const IntegralResult tail = integrate_kz_tail(
            [&](double k) {
              return (2.0 * k * k * c * c - xi2) * rsp + xi2 * rps;
            },
            xi / c, z, inner);
        return g * tail.value;
      },
      spec);
  return pref * r.value;
}

// Non-retarded electric and chiral potential components for an isotropic
// chiral half-space, off-resonant integrals plus resonant closed forms at
// the downward transition frequencies.
inline PotentialBreakdown u_nonretarded_halfspace(const ChiralMedium& medium,
                                                  const Molecule& mol, double z,
                                                  const QuadratureSpec& spec) {
  detail::require_positive_distance(z);
  const Constants k = si_constants();
  const double z3 = z * z * z;
  PotentialBreakdown out;

  const double pref_e = -k.hbar / (16.0 * M_PI * M_PI * k.eps0 * z3);
  out.u_electric_offres =
      pref_e * integrate_semiinfinite(
                   [&](double xi) {
                     const ReflectionSet refl =
                         nonretarded_halfspace(eval_imag(medium, xi));
                     return alpha_iso(mol, xi) * refl.rpp.real();
                   },
                   spec)
                   .value;

  // i*kappa/D equals rsp/2 for the non-retarded half-space.
  const double pref_c = k.hbar * k.z0 / (4.0 * M_PI * M_PI * z3);
  out.u_chiral_offres =
      pref_c * integrate_semiinfinite(
                   [&](double xi) {
                     const ReflectionSet refl =
                         nonretarded_halfspace(eval_imag(medium, xi));
                     return gamma_iso(mol, xi) * 0.5 * refl.rsp.real();
                   },
                   spec)
                   .value;

  for (const auto& t : downward_transitions(mol)) {
    const double omega = -t.omega_kn; // omega_nk > 0
    const ReflectionSet refl = nonretarded_halfspace(eval_real(medium, omega));
    out.u_electric_res += -1.0 / (24.0 * M_PI * k.eps0 * z3) * t.dipole_sq *
                          refl.rpp.real();
    out.u_chiral_res += k.z0 / (6.0 * M_PI * z3) * t.rotatory *
                        (0.5 * refl.rsp).imag();
  }
  return out;
}

// All non-retarded components scale as 1/z^3, so F = -dU/dz = 3U/z
// componentwise.
inline ForceBreakdown force_nonretarded(const ChiralMedium& medium,
                                        const Molecule& mol, double z,
                                        const QuadratureSpec& spec) {
  const PotentialBreakdown u = u_nonretarded_halfspace(medium, mol, z, spec);
  return ForceBreakdown{3.0 * u.u_electric_offres / z,
                        3.0 * u.u_electric_res / z,
                        3.0 * u.u_chiral_offres / z,
                        3.0 * u.u_chiral_res / z};
}

// Force on a ground-state molecule facing a perfect chiral mirror, by
// differentiating under the integral:
//   F(z) = +/- hbar*Z0/(8 pi^2 z^4)
//          * int_0^inf Gamma(i xi) exp(-s z) (s^2 z^2 + 3 s z + 3) dxi,
// with s = 2 xi / c.
inline double force_perfect_mirror(Handedness h, const Molecule& mol, double z,
                                   const QuadratureSpec& spec) {
  detail::require_positive_distance(z);
  detail::require_ground_state(mol);
  const Constants k = si_constants();
  const double pref = detail::handedness_sign(h) * k.hbar * k.z0 /
                      (8.0 * M_PI * M_PI * z * z * z * z);
  const IntegralResult r = integrate_semiinfinite(
      [&](double xi) {
        const double sz = 2.0 * xi * z / k.c;
        return gamma_iso(mol, xi) * std::exp(-sz) * (sz * sz + 3.0 * sz + 3.0);
      },
      spec);
  return pref * r.value;
}

} // namespace chiralcp
