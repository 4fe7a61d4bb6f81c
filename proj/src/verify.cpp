#include "minsurf/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <random>

#include "minsurf/anglefam.hpp"
#include "minsurf/builtin.hpp"
#include "minsurf/moduli.hpp"
#include "minsurf/weier.hpp"

namespace minsurf {

namespace {

using clock_t_ = std::chrono::steady_clock;

double ms_since(clock_t_::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
}

// deterministic samples on the unit circle, away from the branch points
std::vector<SurfacePoint> circle_samples(const TrigonalCurve& curve, int count,
                                         unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SurfacePoint> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const real_t t = real_t(u(rng)) * 2 * pi();
    const complex_t z = expi(t);
    const complex_t pz = curve.p(z);
    if (cabs(pz) < real_t("1e-3")) continue;  // stay clear of the branch points
    out.push_back({z, cube_roots(pz)[0]});
  }
  return out;
}

struct Timer {
  clock_t_::time_point t0 = clock_t_::now();
  double stop() const { return ms_since(t0); }
};

}  // namespace

VerificationReport run_paper_verification(const RunConfig& cfg, Exec exec) {
  VerificationReport rep;
  const auto add = [&](CheckEntry e) { rep.checks.push_back(std::move(e)); };
  const double tol_alg = static_cast<double>(cfg.tol_algebraic);
  const double tol_num = static_cast<double>(cfg.tol_numeric);

  // --- curve construction -------------------------------------------------
  Timer t_curve;
  const TrigonalCurve curve = cfg.curve();
  add({"curve.construction", "genus-4 trigonal curve from six distinct roots",
       "w^3 = (z-a1)...(z-a6), g = 4", 0.0, 0.0, curve.genus() == 4, t_curve.stop()});

  const std::vector<Differential> phi = cfg.differentials();
  const std::vector<Differential> basis = builtin::canonical_basis();
  WeierstrassData data{curve, phi, builtin::basepoint(), std::nullopt};

  // --- conformality --------------------------------------------------------
  {
    Timer t;
    const auto samples = circle_samples(curve, 100, 20240901u);
    const auto r = check_conformality(data, samples, cfg.tol_algebraic);
    add({"conformality.phi", "sum of squared densities vanishes at random samples",
         "sum_i w_i^2 = 0", static_cast<double>(r.max_residual), tol_alg, r.pass, t.stop()});
  }

  // --- common zeros ---------------------------------------------------------
  {
    Timer t;
    const auto cand = common_zero_candidates(data);
    const auto r = check_common_zeros(data, cand, real_t("1e-8"));
    add({"common_zeros.phi", "the immersion triple has no common zeros",
         "no common zeros (finite and infinite points)",
         static_cast<double>(r.min_peak_density), 1e-8, r.pass, t.stop()});
  }
  {
    Timer t;
    WeierstrassData bdata{curve, basis, builtin::basepoint(), std::nullopt};
    const auto cand = common_zero_candidates(bdata);
    const auto r = check_common_zeros(bdata, cand, real_t("1e-8"));
    add({"common_zeros.basis", "the holomorphic basis has no common zeros",
         "no common zeros for dz/w^2, z dz/w^2, z^2 dz/w^2, dz/w",
         static_cast<double>(r.min_peak_density), 1e-8, r.pass, t.stop()});
  }

  // --- reference constants ---------------------------------------------------
  Timer t_const;
  const ReferenceConstants rc = reference_constants(cfg.precision);
  const real_t loose_target = cfg.precision * 100;
  const ReferenceConstants rc_loose = reference_constants(loose_target);
  {
    const real_t drift = std::max({abs(rc.a - rc_loose.a), abs(rc.b - rc_loose.b),
                                   abs(rc.c - rc_loose.c)});
    const bool pass = rc.a > 0 && rc.b > 0 && rc.c > 0 && rc.err_a <= cfg.precision &&
                      rc.err_b <= cfg.precision && rc.err_c <= cfg.precision &&
                      drift <= loose_target;
    add({"constants.reference", "1-D reference integrals A, B, C",
         "A, B, C > 0 with error estimates within target",
         static_cast<double>(drift), static_cast<double>(loose_target), pass, t_const.stop()});
  }

  // --- period matrices -------------------------------------------------------
  const std::vector<Cycle> cycles = cfg.cycles(curve);

  {
    Timer t;
    real_t worst = 0;
    bool ok = true;
    for (const auto& c : cycles) {
      const auto v = validate_cycle(curve, c);
      worst = std::max({worst, v.max_z_gap, v.max_w_gap});
      ok = ok && v.closed;
    }
    add({"cycles.closure", "all stored cycles chain up to closed loops",
         "A1..A4, B1..B4 are closed on the surface", static_cast<double>(worst), 1e-8, ok,
         t.stop()});
  }

  Timer t_omega;
  const PeriodMatrix om = period_matrix(curve, phi, cycles, cfg.precision, exec);
  {
    const RealMat expect = builtin::omega_pattern(rc.a, rc.b, rc.c);
    const real_t resid = max_abs(om.entries - expect);
    add({"periods.omega_pattern", "branch-tracked cycle periods match the stated pattern",
         "Omega = Re(X Y)", static_cast<double>(resid), tol_num, resid <= cfg.tol_numeric,
         t_omega.stop()});
  }

  std::vector<Differential> phi_conj;
  for (const auto& d : phi) phi_conj.push_back(d.scaled(complex_t(0, 1)));
  Timer t_omega_p;
  const PeriodMatrix om_p = period_matrix(curve, phi_conj, cycles, cfg.precision, exec);
  {
    const RealMat expect = builtin::omega_conj_pattern(rc.a, rc.b, rc.c);
    const real_t resid = max_abs(om_p.entries - expect);
    add({"periods.conjugate_pattern", "periods of i*Phi match the conjugate pattern",
         "Omega' = Re(X' Y')", static_cast<double>(resid), tol_num,
         resid <= cfg.tol_numeric, t_omega_p.stop()});
  }

  // --- factorizations ---------------------------------------------------------
  const IntMat g1 = cfg.override_intmat("g1").value_or(builtin::g1());
  const IntMat g2 = cfg.override_intmat("g2").value_or(builtin::g2());
  const IntMat g1p = cfg.override_intmat("g1_conj").value_or(builtin::g1_conj());
  const IntMat g2p = cfg.override_intmat("g2_conj").value_or(builtin::g2_conj());
  {
    Timer t;
    real_t resid = 0;
    const bool ok = verify_factorization(om.entries, g1, g2,
                                         builtin::lambda_basis(rc.a, rc.b, rc.c),
                                         cfg.tol_numeric, &resid);
    add({"factorization.primary", "integer certificates tie the periods to the lattice",
         "Omega G1 = Lambda, Lambda G2 = Omega", static_cast<double>(resid), tol_num, ok,
         t.stop()});
  }
  {
    Timer t;
    real_t resid = 0;
    const bool ok = verify_factorization(om_p.entries, g1p, g2p,
                                         builtin::lambda_conj_basis(rc.a, rc.b, rc.c),
                                         cfg.tol_numeric, &resid);
    add({"factorization.conjugate", "conjugate periods against the primed lattice",
         "Omega' G1' = Lambda', Lambda' G2' = Omega'", static_cast<double>(resid), tol_num,
         ok, t.stop()});
  }

  // --- associate family ---------------------------------------------------------
  {
    Timer t;
    real_t worst = 0;
    const real_t thetas[3] = {pi() / 6, pi() / 3, real_t(1)};
    for (const auto& th : thetas) {
      std::vector<Differential> rotated;
      for (const auto& d : phi) rotated.push_back(d.scaled(expi(th)));
      const PeriodMatrix pm = period_matrix(curve, rotated, cycles, cfg.precision, exec);
      const RealMat expect = associate_period_matrix(om.entries, om_p.entries, th);
      worst = std::max(worst, max_abs(pm.entries - expect));
    }
    add({"associate.linearity", "rotated periods equal the cos/sin combination",
         "Omega_theta = cos(theta) Omega + sin(theta) Omega'", static_cast<double>(worst),
         tol_num, worst <= cfg.tol_numeric, t.stop()});
  }

  // --- coprime angle sweep ----------------------------------------------------
  {
    Timer t;
    int n_max = 10, m_max = 10;
    if (cfg.raw.contains("property_p")) {
      n_max = cfg.raw.at("property_p").value("n_max", 10);
      m_max = cfg.raw.at("property_p").value("m_max", 10);
    }
    const auto reports = property_p_sweep(om, om_p, n_max, m_max, cfg.tol_numeric,
                                          cfg.max_height, exec);
    real_t worst = 0;
    bool ok = true;
    for (const auto& r : reports) {
      worst = std::max({worst, r.resid_f1, r.resid_f2, r.resid_entry34});
      ok = ok && r.pass();
    }
    add({"property_p.sweep", "angle family certificates over all coprime pairs",
         "Omega_theta F1 = Omega'_theta, Omega'_theta F2 = Omega_theta, rank_Q = 3",
         static_cast<double>(worst), tol_num, ok && !reports.empty(), t.stop()});
  }

  // --- cube symmetry refutation --------------------------------------------------
  {
    Timer t;
    const LatticeBasis lam = builtin::lambda_basis(rc.a, rc.b, rc.c);
    real_t dist = 0;
    const bool invariant = lattice_invariant_under(lam, builtin::cyclic_rotation(), &dist);
    add({"symmetry.cube_refuted", "the coordinate 3-cycle does not preserve the lattice",
         "Lambda^-1 R1 Lambda is not integral", static_cast<double>(dist), 0.1,
         !invariant && dist >= real_t("0.1"), t.stop()});
  }
  {
    Timer t;
    const LatticeBasis lam = builtin::lambda_basis(rc.a, rc.b, rc.c);
    real_t dist = 0;
    const bool invariant = lattice_invariant_under(lam, builtin::minus_identity(), &dist);
    add({"symmetry.inversion", "the inversion preserves every lattice",
         "Lambda^-1 (-I) Lambda is integral", static_cast<double>(dist),
         static_cast<double>(lattice_integrality_tol()), invariant, t.stop()});
  }

  // --- holomorphy of the 4-torus lift ----------------------------------------------
  {
    Timer t;
    std::mt19937_64 rng(777u);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    bool ok = true;
    real_t min_entry = -1;
    for (int k = 0; k < 20; ++k) {
      const complex_t b1(real_t(u(rng)), real_t(u(rng)));
      const complex_t b2(real_t(u(rng)), real_t(u(rng)));
      real_t worst = 0;
      const bool holo = holomorphy_test(builtin::lift_matrix(b1, b2), cfg.tol_algebraic, &worst);
      ok = ok && !holo;
      if (min_entry < 0 || worst < min_entry) min_entry = worst;
    }
    add({"holomorphy.lift_matrix", "the 4-torus lift is never holomorphic",
         "M^T M != 0 for the lift matrix", static_cast<double>(min_entry), tol_alg, ok,
         t.stop()});
  }
  {
    Timer t;
    ComplexMat col(2, 1);
    col(0, 0) = complex_t(1);
    col(1, 0) = complex_t(0, 1);
    const bool a = holomorphy_test(col, cfg.tol_algebraic);
    const bool b = holomorphy_test(ComplexMat(3, 2), cfg.tol_algebraic);
    add({"holomorphy.degenerate_cases", "isotropic column and zero matrix are holomorphic",
         "M^T M = 0 for (1, i)^T and 0", 0.0, tol_alg, a && b, t.stop()});
  }

  // --- moduli dimensions ----------------------------------------------------------
  {
    Timer t;
    bool ok = true;
    long worst = 0;
    const auto expect = [&](const ComponentSpec& s, long want) {
      const auto r = component_dimension(s);
      ok = ok && (r.total == want);
      worst = std::max(worst, labs(r.total - want));
    };
    expect({ComponentKind::hyperelliptic, 5, 2, -1}, 20);
    expect({ComponentKind::trigonal, 4, -1, -1}, 16);
    expect({ComponentKind::trigonal, 7, -1, -1}, 28);
    expect({ComponentKind::d_gonal, 7, -1, 4}, 28);
    expect({ComponentKind::holomorphic, 4, -1, -1}, 18);
    add({"moduli.dimensions", "component dimension arithmetic",
         "4g for gonal/hyperelliptic components, 5g-2 holomorphic",
         static_cast<double>(worst), 0.0, ok, t.stop()});
  }

  // --- deck symmetry on periods ------------------------------------------------------
  {
    Timer t;
    real_t worst = 0;
    std::vector<Differential> all = phi;
    all.push_back(builtin::dz_over_w());
    for (const auto& c : cycles) {
      const Cycle image = deck_transform(curve, c, Deck::psi, c.name + "~psi");
      for (const auto& d : all) {
        const complex_t lhs = integrate_along(curve, d, image, cfg.precision);
        const complex_t rhs =
            unit_root3(d.w_power == 2 ? 1 : 2) * integrate_along(curve, d, c, cfg.precision);
        worst = std::max(worst, cabs(lhs - rhs));
      }
    }
    add({"deck.period_relations", "sheet rotation scales periods by the eigenvalue",
         "int_{psi(c)} = w int_c (w-power 2), w^2 (w-power 1)", static_cast<double>(worst),
         tol_num, worst <= cfg.tol_numeric, t.stop()});
  }

  return rep;
}

}  // namespace minsurf
