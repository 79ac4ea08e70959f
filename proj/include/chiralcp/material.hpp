#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace chiralcp {

using complex = std::complex<double>;

// Single-resonance Drude-Lorentz oscillator,
//   eps(w) = 1 - strength^2 / (w^2 - resonance^2 + i*damping*w).
// The same form serves the permittivity and the permeability.
struct LorentzOscillator {
  double strength;  // rad/s
  double resonance; // rad/s
  double damping;   // rad/s
};

// Condon model for the chirality parameter,
//   kappa(w) = a*w / (w^2 - omega_c^2 + i*gamma_c*w).
// gamma_c may be negative; published metamaterial fits use negative values.
struct CondonChirality {
  double a;       // rad/s, signed rotatory oscillator strength
  double omega_c; // rad/s
  double gamma_c; // rad/s, signed
};

struct ChiralMedium {
  LorentzOscillator eps_model;
  LorentzOscillator mu_model;
  CondonChirality kappa_model;
};

struct ResponseTriple {
  complex eps;
  complex mu;
  complex kappa;
};

class UndampedResonanceError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

namespace detail {

inline complex lorentz_real(const LorentzOscillator& m, double omega) {
  const complex den(omega * omega - m.resonance * m.resonance,
                    m.damping * omega);
  if (std::abs(den) == 0.0)
    throw UndampedResonanceError("oscillator denominator vanishes at omega");
  return 1.0 - m.strength * m.strength / den;
}

// At omega = i*xi the denominator is -(xi^2 + res^2 + damping*xi), real.
inline double lorentz_imagfreq(const LorentzOscillator& m, double xi) {
  const double den = xi * xi + m.resonance * m.resonance + m.damping * xi;
  if (den == 0.0)
    throw UndampedResonanceError("oscillator denominator vanishes at i*xi");
  return 1.0 + m.strength * m.strength / den;
}

} // namespace detail

// Response at real angular frequency omega > 0.
inline ResponseTriple eval_real(const ChiralMedium& medium, double omega) {
  if (!(omega > 0.0))
    throw std::invalid_argument("eval_real: omega must be positive");
  const auto& kc = medium.kappa_model;
  const complex kden(omega * omega - kc.omega_c * kc.omega_c,
                     kc.gamma_c * omega);
  if (std::abs(kden) == 0.0)
    throw UndampedResonanceError("Condon denominator vanishes at omega");
  return ResponseTriple{detail::lorentz_real(medium.eps_model, omega),
                        detail::lorentz_real(medium.mu_model, omega),
                        kc.a * omega / kden};
}

// Response at imaginary frequency, omega = i*xi with xi >= 0. eps and mu
// come out real, kappa purely imaginary:
//   kappa(i*xi) = -i * a*xi / (xi^2 + omega_c^2 + gamma_c*xi),
// so i*kappa(i*xi) is real. The imaginary/real parts are set exactly to
// zero rather than left to round-off.
inline ResponseTriple eval_imag(const ChiralMedium& medium, double xi) {
  if (!(xi >= 0.0))
    throw std::invalid_argument("eval_imag: xi must be non-negative");
  const auto& kc = medium.kappa_model;
  const double kden = xi * xi + kc.omega_c * kc.omega_c + kc.gamma_c * xi;
  if (kden == 0.0)
    throw UndampedResonanceError("Condon denominator vanishes at i*xi");
  return ResponseTriple{complex(detail::lorentz_imagfreq(medium.eps_model, xi), 0.0),
                        complex(detail::lorentz_imagfreq(medium.mu_model, xi), 0.0),
                        complex(0.0, -kc.a * xi / kden)};
}

// i*kappa(i*xi) as a real number; the combination entering every
// imaginary-frequency chiral integrand.
inline double i_kappa_imag(const ChiralMedium& medium, double xi) {
  return eval_imag(medium, xi).kappa.imag() * -1.0;
}

struct PassivityReport {
  bool passive;
  double margin; // Im(eps)*Im(mu) - Im(kappa)^2, positive when passive
};

// Checks (Im kappa)^2 < Im(eps)*Im(mu) at a real frequency. Diagnostic
// only; metamaterial parameter fits routinely violate it.
inline PassivityReport passivity_report(const ChiralMedium& medium,
                                        double omega) {
  const ResponseTriple r = eval_real(medium, omega);
  const double ik = r.kappa.imag();
  const double margin = r.eps.imag() * r.mu.imag() - ik * ik;
  return PassivityReport{margin > 0.0, margin};
}

} // namespace chiralcp
