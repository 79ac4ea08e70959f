// Acceptance gate for the whole pipeline: nine end-to-end criteria, one
// pass/fail line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "chiralcp/cavity.hpp"
#include "oracles.hpp"

using namespace chiralcp;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// 1. The general scattering integral with perfect-mirror coefficients must
// reproduce the closed-form mirror potential at short, medium and long
// range for both mirror handednesses.
Result criterion1() {
  const Molecule mol = dmds_example(false);
  const QuadratureSpec spec = default_xi_spec(mol);
  double worst = 0.0;
  for (Handedness h : {Handedness::RightHanded, Handedness::LeftHanded})
    for (double z : {1e-9, 1e-8, 1e-7}) {
      const double general =
          u_chiral_general_offres(PerfectChiralMirror{h}, mol, z, spec);
      const double closed = u_chiral_perfect_mirror(h, mol, z, spec);
      worst = std::max(worst, rel_err(general, closed));
    }
  return {worst <= 1e-6,
          fmt("general integral vs mirror closed form, max rel err %.2e "
              "(limit 1e-6)",
              worst)};
}

// 2. Long-range behaviour: the mirror potential approaches its retarded
// closed form at z*omega/c = 100 and falls off as z^-5 there.
Result criterion2() {
  const Molecule mol = dmds_example(false);
  const QuadratureSpec spec = default_xi_spec(mol);
  const Constants k = si_constants();
  const double z = 100.0 * k.c / kDmdsOmega;
  const Handedness h = Handedness::RightHanded;
  const double u1 = u_chiral_perfect_mirror(h, mol, z, spec);
  const double u2 = u_chiral_perfect_mirror(h, mol, 2.0 * z, spec);
  const double ratio = u1 / u_chiral_retarded_limit(mol, z, h);
  const double scaling = std::abs(u2 * 32.0 / u1 - 1.0);
  return {std::abs(ratio - 1.0) <= 0.01 && scaling < 0.02,
          fmt("retarded asymptote ratio %.6f (1 +/- 0.01), z^-5 scaling "
              "defect %.2e (< 0.02)",
              ratio, scaling)};
}

// 3. Short-range behaviour: ratio to the logarithmic closed form at
// z*omega/c = 1e-3, and a z^-3 power law for U/ln(omega z/c) across the
// decade below that point.
Result criterion3() {
  const Molecule mol = dmds_example(false);
  const QuadratureSpec spec = default_xi_spec(mol);
  const Constants k = si_constants();
  const Handedness h = Handedness::RightHanded;
  const double zref = 1e-3 * k.c / kDmdsOmega;
  const double ratio = u_chiral_perfect_mirror(h, mol, zref, spec) /
                       u_chiral_nonretarded_limit(mol, zref, h);

  // Least-squares slope of ln|U/ln(omega z/c)| against ln z.
  const int n = 9;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double z = zref * std::pow(10.0, -1.0 + static_cast<double>(i) / (n - 1));
    const double v = u_chiral_perfect_mirror(h, mol, z, spec) /
                     std::log(kDmdsOmega * z / k.c);
    const double x = std::log(z), y = std::log(std::abs(v));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {std::abs(ratio - 1.0) <= 0.10 && std::abs(slope + 3.0) <= 0.1,
          fmt("non-retarded ratio %.4f (1 +/- 0.10), fitted exponent %.4f "
              "(-3.0 +/- 0.1)",
              ratio, slope)};
}

// 4. With kappa = 0 and mu = 1 the electric half-space potential reduces
// to the classic dielectric result, checked against a 1e6-node trapezoid
// oracle.
Result criterion4() {
  const Molecule mol = dmds_example(false);
  const QuadratureSpec spec = default_xi_spec(mol);
  const Constants k = si_constants();
  ChiralMedium diel = testing::fig2_medium();
  diel.mu_model.strength = 0.0;
  diel.kappa_model.a = 0.0;
  const double z = 1e-8;
  const PotentialBreakdown u = u_nonretarded_halfspace(diel, mol, z, spec);
  auto f = [&](double xi) {
    const double eps = eval_imag(diel, xi).eps.real();
    return alpha_iso(mol, xi) * (eps - 1.0) / (eps + 1.0);
  };
  const double oracle = -k.hbar /
                        (16.0 * M_PI * M_PI * k.eps0 * z * z * z) *
                        testing::trapezoid_log(f, 1e7, 1e21, 1000000);
  const double err = rel_err(u.u_electric_offres, oracle);
  return {err <= 1e-6,
          fmt("dielectric closed form vs 1e6-node oracle, rel err %.2e "
              "(limit 1e-6)",
              err)};
}

// 5. Structural zeroes and antisymmetries, bit-exact across 100 randomized
// parameter sets: chiral components vanish for achiral media or achiral
// molecules; negating every rotatory strength, or the medium chirality
// strength, negates the chiral components and leaves the electric ones
// bit-identical.
Result criterion5() {
  std::mt19937_64 rng(20240824u);
  auto logu = [&](double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    return std::exp(d(rng));
  };
  auto coin = [&] { return rng() & 1u; };

  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ChiralMedium med;
    med.eps_model = {logu(1e14, 1e15), logu(1e14, 1e15), logu(1e12, 5e13)};
    med.mu_model = {logu(1e13, 5e14), logu(1e14, 1e15), logu(1e12, 5e13)};
    med.kappa_model = {(coin() ? 1.0 : -1.0) * logu(1e13, 3e14),
                       logu(1e14, 1e15), logu(1e12, 5e13)};

    Molecule mol;
    const std::size_t nt = 1 + rng() % 3;
    for (std::size_t i = 0; i < nt; ++i)
      mol.transitions.push_back(
          Transition{(coin() ? 1.0 : -1.0) * logu(2e15, 2e16),
                     logu(1e-61, 1e-59), (coin() ? 1.0 : -1.0) * logu(1e-65, 1e-63)});
    const double z = logu(1e-9, 1e-7);
    const QuadratureSpec spec = default_xi_spec(mol);

    bool ok = true;
    try {
      const PotentialBreakdown base = u_nonretarded_halfspace(med, mol, z, spec);

      ChiralMedium achiral = med;
      achiral.kappa_model.a = 0.0;
      const PotentialBreakdown ua = u_nonretarded_halfspace(achiral, mol, z, spec);
      ok = ok && ua.u_chiral_offres == 0.0 && ua.u_chiral_res == 0.0;

      Molecule flat = mol;
      for (auto& t : flat.transitions)
        t.rotatory = 0.0;
      const PotentialBreakdown u0 = u_nonretarded_halfspace(med, flat, z, spec);
      ok = ok && u0.u_chiral_offres == 0.0 && u0.u_chiral_res == 0.0;

      const PotentialBreakdown um =
          u_nonretarded_halfspace(med, mirror(mol), z, spec);
      ok = ok && um.u_chiral_offres == -base.u_chiral_offres &&
           um.u_chiral_res == -base.u_chiral_res &&
           um.u_electric_offres == base.u_electric_offres &&
           um.u_electric_res == base.u_electric_res;

      ChiralMedium flipped = med;
      flipped.kappa_model.a = -flipped.kappa_model.a;
      const PotentialBreakdown uf = u_nonretarded_halfspace(flipped, mol, z, spec);
      ok = ok && uf.u_chiral_offres == -base.u_chiral_offres &&
           uf.u_chiral_res == -base.u_chiral_res &&
           uf.u_electric_offres == base.u_electric_offres &&
           uf.u_electric_res == base.u_electric_res;
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok)
      ++failures;
  }
  return {failures == 0,
          fmt("nullity/antisymmetry over 100 randomized sets, %g failures",
              static_cast<double>(failures))};
}

ChiralMedium flip_a(ChiralMedium m) {
  m.kappa_model.a = -m.kappa_model.a;
  return m;
}

// 6. Ground-state molecule in the 100 nm metamaterial cavity, 200-point
// scan: the electric total force cancels at mid-gap, the chiral total does
// not, and the electric force dominates by >= 1e3 at 25 nm off-center.
Result criterion6() {
  CavityConfig cfg;
  cfg.gap_width = 100e-9;
  cfg.left_medium = testing::fig2_medium();
  cfg.right_medium = flip_a(cfg.left_medium);
  cfg.molecule = dmds_example(false);
  cfg.grid = 200;
  const QuadratureSpec spec = default_xi_spec(cfg.molecule);
  const CavityScan s = scan(cfg, spec, 4);

  // The even grid straddles z = 0; interpolate the two central samples.
  const CavityPoint& a = s.points[cfg.grid / 2 - 1];
  const CavityPoint& b = s.points[cfg.grid / 2];
  const double fe_mid = 0.5 * (a.f_e_total + b.f_e_total);
  const double fc_mid = 0.5 * (a.f_c_total + b.f_c_total);
  const double single_wall = std::max(std::abs(a.f_e_left), std::abs(b.f_e_left));
  const double r_minus = magnitude_ratio(s, -25e-9);
  const double r_plus = magnitude_ratio(s, 25e-9);
  const bool pass = std::abs(fe_mid) < 1e-10 * single_wall && fc_mid != 0.0 &&
                    r_minus >= 1e3 && r_plus >= 1e3;
  return {pass,
          fmt("mid-gap |F_e|/wall %.2e (< 1e-10), |F_e/F_c| at -/+25 nm "
              "%.2e / %.2e (>= 1e3)",
              std::abs(fe_mid) / single_wall, r_minus, r_plus)};
}

// 7. Excited-state cavity with the resonance-ratio medium and the plasma
// frequency as tuning knob. Documented operating point: the representable
// plasma frequency closest to the zero of the total electric potential
// coefficient, omega_p = 1.0303105712877598e16 rad/s, where the single-wall
// electric potential at 10 nm drops to +3.18e-36 J against a chiral
// potential of -1.81e-39 J.
//
// The chiral direction reversal relative to the ground state is expected
// to hold. The >5 nm dominance-width requirement cannot be met in double
// precision: near its only zero the electric coefficient moves ~2.3e-36 J
// per rad/s of plasma frequency while the chiral coefficient stays near
// 1.8e-39 J, so suppressing the electric force below the chiral one would
// need the knob resolved to ~1e-4 rad/s -- four orders of magnitude finer
// than the 2 rad/s spacing of adjacent doubles at 1.03e16. The check is
// kept honest and reports the measured width.
Result criterion7() {
  const double wp = 1.0303105712877598e16;
  CavityConfig cfg;
  cfg.gap_width = 100e-9;
  cfg.left_medium.eps_model = {wp, wp / 2.0, wp / 1e3};
  cfg.left_medium.mu_model = {wp / 5.0, wp / 2.0, wp / 1e3};
  cfg.left_medium.kappa_model = {-wp / 3.0, wp / 2.0, -wp / 1e3};
  cfg.right_medium = flip_a(cfg.left_medium);
  cfg.molecule = dmds_example(true);
  cfg.grid = 200;
  const QuadratureSpec spec = default_xi_spec(cfg.molecule);
  const CavityScan excited = scan(cfg, spec, 4);
  cfg.molecule = dmds_example(false);
  const CavityScan ground = scan(cfg, spec, 4);

  bool reversed = true;
  for (double z : {-10e-9, 10e-9, 25e-9}) {
    std::size_t i = 0;
    while (i + 2 < excited.points.size() && excited.points[i + 1].z < z)
      ++i;
    reversed = reversed && (excited.points[i].f_c_total > 0.0) !=
                               (ground.points[i].f_c_total > 0.0);
  }
  const double width = dominance_region(excited).width();
  return {reversed && width > 5e-9,
          std::string("chiral direction reversed vs ground state: ") +
              (reversed ? "yes" : "no") +
              fmt("; dominance width %.2e m (needs > 5e-9 m) at omega_p = "
                  "1.0303105712877598e16 rad/s",
                  width)};
}

// 8. Every analytic force matches a central finite difference of its
// potential at 20 randomized (scenario, z) pairs, and converged integrals
// are stable under doubling the starting node count.
Result criterion8() {
  std::mt19937_64 rng(7u);
  auto logu = [&](double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    return std::exp(d(rng));
  };
  const ChiralMedium med = testing::fig2_medium();
  double worst = 0.0;
  for (int pair = 0; pair < 20; ++pair) {
    const double z = logu(2e-9, 5e-8);
    const double h = 1e-5 * z;
    const int kind = pair % 4;
    if (kind == 0 || kind == 1) {
      const Handedness hand =
          kind == 0 ? Handedness::RightHanded : Handedness::LeftHanded;
      const Molecule mol = dmds_example(false);
      const QuadratureSpec spec = default_xi_spec(mol);
      const double f = force_perfect_mirror(hand, mol, z, spec);
      const double fd = -(u_chiral_perfect_mirror(hand, mol, z + h, spec) -
                          u_chiral_perfect_mirror(hand, mol, z - h, spec)) /
                        (2.0 * h);
      worst = std::max(worst, rel_err(f, fd));
    } else {
      const Molecule mol = dmds_example(kind == 3);
      const QuadratureSpec spec = default_xi_spec(mol);
      const ForceBreakdown f = force_nonretarded(med, mol, z, spec);
      const PotentialBreakdown up = u_nonretarded_halfspace(med, mol, z + h, spec);
      const PotentialBreakdown um = u_nonretarded_halfspace(med, mol, z - h, spec);
      worst = std::max(
          worst, rel_err(f.f_electric(),
                         -(up.u_electric() - um.u_electric()) / (2.0 * h)));
      worst = std::max(worst,
                       rel_err(f.f_chiral(),
                               -(up.u_chiral() - um.u_chiral()) / (2.0 * h)));
    }
  }

  // Node-doubling stability of representative converged integrals.
  const Molecule mol = dmds_example(false);
  QuadratureSpec spec = default_xi_spec(mol);
  QuadratureSpec doubled = spec;
  doubled.base_nodes = 2 * spec.base_nodes;
  double stability = 0.0;
  stability = std::max(
      stability,
      rel_err(u_chiral_perfect_mirror(Handedness::RightHanded, mol, 1e-9, doubled),
              u_chiral_perfect_mirror(Handedness::RightHanded, mol, 1e-9, spec)));
  const PotentialBreakdown ua = u_nonretarded_halfspace(med, mol, 1e-8, spec);
  const PotentialBreakdown ub = u_nonretarded_halfspace(med, mol, 1e-8, doubled);
  stability = std::max(stability, rel_err(ub.u_electric(), ua.u_electric()));
  stability = std::max(stability, rel_err(ub.u_chiral(), ua.u_chiral()));

  return {worst <= 1e-5 && stability <= 1e-7,
          fmt("force vs finite difference, max rel err %.2e (limit 1e-5); "
              "node-doubling drift %.2e (limit 1e-7)",
              worst, stability)};
}

// 9. The bundled molecular preset keeps the rotatory strength far below
// the dipole strength: R/c <= 1e-11 |d|^2.
Result criterion9() {
  const double lhs = kDmdsRotatory / si_constants().c;
  const double rhs = 1e-11 * kDmdsDipoleSq;
  return {lhs <= rhs, fmt("R/c = %.3e vs 1e-11 |d|^2 = %.3e", lhs, rhs)};
}

} // namespace

int main() {
  struct Entry {
    Result (*fn)();
    double budget_s; // 0 = no explicit budget
  };
  const Entry entries[] = {
      {criterion1, 10.0}, {criterion2, 0.0}, {criterion3, 0.0},
      {criterion4, 0.0},  {criterion5, 30.0}, {criterion6, 60.0},
      {criterion7, 0.0},  {criterion8, 0.0},  {criterion9, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r = entries[i].fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (entries[i].budget_s > 0.0 && secs > entries[i].budget_s) {
      r.pass = false;
      r.detail += fmt(" [exceeded %.0f s budget]", entries[i].budget_s);
    }
    std::printf("[%zu] %s %s (%.1f s)\n", i + 1, r.pass ? "PASS" : "FAIL",
                r.detail.c_str(), secs);
    if (!r.pass)
      ++failed;
  }
  if (failed > 0) {
    std::printf("%d of 9 criteria failed\n", failed);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
