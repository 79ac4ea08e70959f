#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <variant>

#include "chiralcp/material.hpp"

namespace chiralcp {

// The four reflection coefficients of a planar interface at one frequency.
struct ReflectionSet {
  complex rss;
  complex rsp;
  complex rps;
  complex rpp;
};

enum class Handedness { RightHanded, LeftHanded };

class SingularInterfaceError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Idealized mirror that fully converts s into p polarization and back.
// Frequency independent.
inline ReflectionSet perfect_mirror(Handedness h) {
  const double s = (h == Handedness::RightHanded) ? 1.0 : -1.0;
  return ReflectionSet{complex(0.0), complex(s), complex(-s), complex(0.0)};
}

// Non-retarded reflection coefficients of an isotropic chiral half-space,
// from its response triple at the frequency of interest:
//   D   = eps*mu - kappa^2 + eps + mu + 1
//   rsp = 2i*kappa / D = -rps
//   rss = (eps*mu - kappa^2 - eps + mu - 1) / D
//   rpp = (eps*mu - kappa^2 + eps - mu - 1) / D
inline ReflectionSet nonretarded_halfspace(const ResponseTriple& r) {
  const complex em = r.eps * r.mu - r.kappa * r.kappa;
  const complex den = em + r.eps + r.mu + 1.0;
  if (std::abs(den) < 1e-12 * (1.0 + std::abs(em)))
    throw SingularInterfaceError("interface denominator near zero");
  const complex rsp = complex(0.0, 2.0) * r.kappa / den;
  return ReflectionSet{(em - r.eps + r.mu - 1.0) / den, rsp, -rsp,
                       (em + r.eps - r.mu - 1.0) / den};
}

// Provider contract used by the general scattering integral: reflection
// coefficients at imaginary frequency i*xi. The perfect mirror is the only
// implementation with a valid fully retarded response; the half-space form
// is meaningful in the non-retarded regime.
struct PerfectChiralMirror {
  Handedness handedness;
  ReflectionSet at_imag(double /*xi*/) const {
    return perfect_mirror(handedness);
  }
};

struct NonRetardedChiralHalfspace {
  ChiralMedium medium;
  ReflectionSet at_imag(double xi) const {
    return nonretarded_halfspace(eval_imag(medium, xi));
  }
};

using ReflectionProvider =
    std::variant<PerfectChiralMirror, NonRetardedChiralHalfspace>;

inline ReflectionSet reflection_at_imag(const ReflectionProvider& provider,
                                        double xi) {
  return std::visit([xi](const auto& p) { return p.at_imag(xi); }, provider);
}

} // namespace chiralcp
