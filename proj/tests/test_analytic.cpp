#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/exp_sinh.hpp>

#include "cascade/analytic.hpp"
#include "cascade/error.hpp"
#include "cascade/lindblad.hpp"

using namespace cascade;
using namespace cascade::analytic;

namespace {

const std::vector<double> kDrives = {0.05, 0.1, 0.2, 0.3};

SystemParams params(double w) { return SystemParams(w, 3.0, 0.001); }

AdiabaticIC generic_ic() {
  AdiabaticIC ic;
  ic.D0 = 0.2;
  ic.B0_imag = -0.3;
  ic.Sigma0 = 1.0;
  ic.rho_BB0 = 0.45;
  ic.rho_BG0_plus_GB0 = 0.1;
  return ic;
}

// Five-point central difference.
double derivative(const std::function<double(double)>& f, double t, double h) {
  return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
}

double simpson(const std::function<double(double)>& f, double a, double b, double h) {
  auto n = static_cast<long>(std::ceil((b - a) / h));
  if (n % 2) ++n;
  if (n == 0) return 0.0;
  const double step = (b - a) / static_cast<double>(n);
  double sum = f(a) + f(b);
  for (long k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(a + step * static_cast<double>(k));
  return sum * step / 3.0;
}

double laplace(const std::function<double(double)>& f, double s) {
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate([&](double t) { return f(t) * std::exp(-s * t); }, 1e-13);
}

using AnalyticG2 = double (*)(double, const SystemParams&);
const std::vector<std::pair<const char*, AnalyticG2>> kCurves = {
    {"bvvg", g2_bvvg},           {"vggb", g2_vggb},
    {"v_plus_plus_v", g2_v_plus_plus_v}, {"v_plus_zero_v", g2_v_plus_zero_v},
    {"plus_vv_plus", g2_plus_vv_plus},   {"ex_forward", g2_ex_forward},
    {"ex_backward", g2_ex_backward}};

}  // namespace

TEST_CASE("normalized rates") {
  for (double w : kDrives) {
    const auto p = params(w);
    const auto r = NormalizedRates::from(p);
    CHECK(std::abs(p.omega_eff() * r.omega_n + p.gamma_eff() * r.gamma_n - 1.0) < 1e-12);
  }
}

TEST_CASE("initial conditions") {
  AdiabaticIC ic;
  ic.D0 = 1.5;
  CHECK_THROWS_AS(ic.validate(), std::invalid_argument);
  ic = AdiabaticIC{};
  ic.rho_BB0 = -0.1;
  CHECK_THROWS_AS(ic.validate(), std::invalid_argument);
  CHECK_NOTHROW(AdiabaticIC::ground().validate());
  CHECK_NOTHROW(AdiabaticIC::dressed(1).validate());
  CHECK_THROWS_AS(AdiabaticIC::dressed(0), std::invalid_argument);

  const auto d = AdiabaticIC::dressed(-1);
  CHECK(d.D0 == 0.0);
  CHECK(d.B0_imag == 0.0);
  CHECK(d.Sigma0 == 2.0);
  CHECK(d.rho_BB0 == 1.0);
  CHECK(d.rho_BG0_plus_GB0 == -2.0);

  Ket psi = Ket::Zero();
  psi(index(BareLevel::G)) = 1.0;
  psi(index(BareLevel::B)) = Complex(0.0, 1.0);
  const auto from = AdiabaticIC::from_state(DensityMatrix::pure(psi));
  CHECK(from.D0 == doctest::Approx(0.0));
  CHECK(from.rho_BB0 == doctest::Approx(0.5));
  CHECK(from.Sigma0 == doctest::Approx(1.0));
  // ρ_BG = i/2, so B = ρ_BG − ρ_GB = i.
  CHECK(from.B0_imag == doctest::Approx(1.0));
  CHECK(from.rho_BG0_plus_GB0 == doctest::Approx(0.0));
}

TEST_CASE("inversion and coherence limits") {
  const auto ic = generic_ic();
  for (double w : kDrives) {
    const auto p = params(w);
    const auto r = NormalizedRates::from(p);
    const double g = p.gamma_eff();
    CHECK(inversion_D(0.0, ic, p) == doctest::Approx(ic.D0).epsilon(1e-15));
    CHECK(coherence_B(0.0, ic, p) == doctest::Approx(ic.B0_imag).epsilon(1e-15));
    const double late = 40.0 / g;
    CHECK(std::abs(inversion_D(late, ic, p) + ic.Sigma0 * g * r.gamma_n) < 1e-12);
    CHECK(std::abs(coherence_B(late, ic, p) - ic.Sigma0 * g * r.omega_n) < 1e-12);
  }
}

TEST_CASE("closed forms satisfy the inversion/coherence equations") {
  const auto ic = generic_ic();
  for (double w : kDrives) {
    const auto p = params(w);
    const double g = p.gamma_eff(), o = p.omega_eff();
    const double h = 1e-3 / g;
    for (double t = 2 * h; t < 6.0 / g; t += 97.0) {
      const double d = inversion_D(t, ic, p), b = coherence_B(t, ic, p);
      // Ḋ = −Γ(D + Σ₀) − iΩB and Ḃ = −ΓB − iΩD with B = i·b.
      const double rhs_d = -g * (d + ic.Sigma0) + o * b;
      const double rhs_b = -g * b - o * d;
      const double fd_d = derivative([&](double x) { return inversion_D(x, ic, p); }, t, h);
      const double fd_b = derivative([&](double x) { return coherence_B(x, ic, p); }, t, h);
      const double scale_d = g * std::abs(d + ic.Sigma0) + o * std::abs(b);
      const double scale_b = g * std::abs(b) + o * std::abs(d);
      CHECK(std::abs(fd_d - rhs_d) <= 1e-6 * scale_d);
      CHECK(std::abs(fd_b - rhs_b) <= 1e-6 * scale_b);
    }
  }
}

TEST_CASE("biexciton population from the ground state") {
  const auto ic = AdiabaticIC::ground();
  for (double w : kDrives) {
    const auto p = params(w);
    const double g = p.gamma_eff(), o = p.omega_eff();
    CHECK(rho_bb(0.0, ic, p) == 0.0);
    for (double t = 0.0; t < 5.0 / g; t += 37.0) {
      const double expected =
          std::exp(-g * t) * o * o / (2.0 * (o * o + g * g)) * (std::cosh(g * t) - std::cos(o * t));
      CHECK(std::abs(rho_bb(t, ic, p) - expected) < 1e-13);
    }
    const double limit = o * o / (4.0 * (o * o + g * g));
    CHECK(std::abs(rho_bb(60.0 / g, ic, p) - limit) < 1e-13);
  }
}

TEST_CASE("biexciton population obeys its rate equation") {
  // After eliminating |H⟩: ρ̇_BB = −2Γρ_BB + (Ω/2)·Im B.
  const auto ic = generic_ic();
  for (double w : kDrives) {
    const auto p = params(w);
    const double g = p.gamma_eff(), o = p.omega_eff();
    const double h = 1e-3 / g;
    CHECK(rho_bb(0.0, ic, p) == doctest::Approx(ic.rho_BB0).epsilon(1e-15));
    CHECK(rho_gg(0.0, ic, p) == doctest::Approx(ic.rho_BB0 - ic.D0).epsilon(1e-15));
    for (double t = 2 * h; t < 6.0 / g; t += 89.0) {
      const double bb = rho_bb(t, ic, p);
      const double rhs = -2.0 * g * bb + 0.5 * o * coherence_B(t, ic, p);
      const double fd = derivative([&](double x) { return rho_bb(x, ic, p); }, t, h);
      CHECK(std::abs(fd - rhs) <= 1e-6 * (2.0 * g * std::abs(bb) + 0.5 * o * std::abs(coherence_B(t, ic, p))));
    }
  }
}

TEST_CASE("populations sum to the total occupation") {
  const auto ic = generic_ic();
  for (double w : kDrives) {
    const auto p = params(w);
    for (double t = 0.0; t < 3000.0; t += 101.0) {
      const double vv = rho_vv(t, ic, p);
      // Equal exciton ICs: ρ_HH = ρ_VV.
      CHECK(std::abs(rho_gg(t, ic, p) + rho_bb(t, ic, p) + 2.0 * vv - ic.Sigma0) < 1e-12);
    }
  }
}

TEST_CASE("polarisation") {
  AdiabaticIC ic;
  ic.Sigma0 = 2.0;
  ic.rho_BB0 = 1.0;
  ic.rho_BG0_plus_GB0 = 2.0;
  const auto p = params(0.1);
  for (double t = 0.0; t < 3000.0; t += 150.0) {
    const auto bg = rho_bg(t, ic, p);
    CHECK(std::abs(bg.real() - std::exp(-p.gamma_eff() * t)) < 1e-15);
    CHECK(std::abs(bg.imag() - 0.5 * coherence_B(t, ic, p)) < 1e-15);
  }
}

TEST_CASE("exciton population: shortcut, closed integral and quadrature agree") {
  for (const auto& ic : {AdiabaticIC::ground(), generic_ic(), AdiabaticIC::dressed(1)}) {
    const auto p = params(0.1);
    const double g = p.gamma_eff();
    CHECK(rho_vv_shortcut(0.0, ic, p) ==
          doctest::Approx(0.5 * (ic.Sigma0 + ic.D0 - 2.0 * ic.rho_BB0)));
    for (double t = 0.0; t <= 5.0 / g; t += 250.0) {
      const double vv0 = rho_vv_shortcut(0.0, ic, p);
      const double integral = simpson(
          [&](double s) { return std::exp(g * (s - t)) * rho_bb(s, ic, p); }, 0.0, t, 1e-2 / g);
      const double quad = vv0 * std::exp(-g * t) + g * integral;
      CHECK(std::abs(quad - rho_vv_shortcut(t, ic, p)) < 1e-9);
      CHECK(std::abs(rho_vv_integral(t, ic, p) - rho_vv_shortcut(t, ic, p)) < 1e-12);
    }
  }
}

TEST_CASE("exciton population for unequal exciton start") {
  const auto ic = AdiabaticIC::exciton_v();
  const auto p = params(0.2);
  CHECK_THROWS_AS(rho_vv_shortcut(10.0, ic, p), std::invalid_argument);
  CHECK(rho_vv(0.0, ic, p) == doctest::Approx(1.0));
  const double g = p.gamma_eff();
  for (double t = 0.0; t <= 5.0 / g; t += 250.0) {
    const double integral = simpson(
        [&](double s) { return std::exp(g * (s - t)) * rho_bb(s, ic, p); }, 0.0, t, 1e-2 / g);
    CHECK(std::abs(std::exp(-g * t) + g * integral - rho_vv(t, ic, p)) < 1e-9);
  }
  // After a biexciton photon the conditional V population, normalized by its
  // steady value, is the biexciton-first correlation.
  const double o = p.omega_eff();
  const double vv_inf = 0.25 * o * o / (o * o + g * g);
  for (double t = 0.0; t <= 6.0 / g; t += 200.0)
    CHECK(std::abs(rho_vv(t, ic, p) / vv_inf - g2_bvvg(t, p)) < 1e-11);
}

TEST_CASE("exact limits of the correlation curves") {
  for (double w : kDrives) {
    const auto p = params(w);
    const double a = p.alpha();
    CHECK(std::abs(g2_bvvg(0.0, p) - 4.0 * (1.0 + a)) < 1e-12 * (1.0 + a));
    CHECK(std::abs(g2_vggb(0.0, p)) < 1e-12);
    CHECK(std::abs(g2_v_plus_plus_v(0.0, p) - 4.0 * (1.0 + a) / (1.0 + 2.0 * a)) < 1e-12);
    CHECK(std::abs(g2_v_plus_zero_v(0.0, p)) < 1e-12);
    CHECK(std::abs(g2_ex_backward(0.0, p) - (1.0 + 1.0 / (1.0 + 2.0 * a))) < 1e-12);
    CHECK(std::abs(g2_ex_forward(0.0, p) - 4.0 * (1.0 + a)) < 1e-12 * (1.0 + a));
    const double late = 20.0 / p.gamma_eff();
    for (const auto& [n, f] : kCurves) {
      CAPTURE(n);
      CHECK(std::abs(f(late, p) - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("exciton-first correlation stays below 4") {
  for (double w : {0.02, 0.05, 0.1, 0.3, 1.0, 2.0})
    for (double gx : {1e-5, 1e-4, 1e-3, 1e-2}) {
      const SystemParams p(w, 3.0, gx);
      const double end = 10.0 / p.gamma_eff();
      double top = 0.0;
      for (int k = 0; k <= 20000; ++k) top = std::max(top, g2_vggb(end * k / 20000.0, p));
      CAPTURE(w);
      CAPTURE(gx);
      CHECK(top < 4.0);
    }
  const SystemParams p(0.5, 3.0, 1e-6);
  const double half_period = std::numbers::pi / p.omega_eff();
  REQUIRE(p.gamma_eff() * half_period < 1e-3);
  CHECK(g2_vggb(half_period, p) < 4.0);
  CHECK(g2_vggb(half_period, p) > 3.99);
}

TEST_CASE("dressed correlation at zero delay") {
  for (double w : {0.02, 0.05, 0.1, 0.3, 1.0}) {
    const auto p = params(w);
    const double v = g2_v_plus_plus_v(0.0, p);
    CHECK(v > 2.0);
    CHECK(v < 4.0);
  }
  CHECK(g2_v_plus_plus_v(0.0, SystemParams(1.0, 3.0, 1e-7)) == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(g2_v_plus_plus_v(0.0, SystemParams(1e-4, 3.0, 1e-2)) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("conditional dressed populations") {
  for (double w : kDrives) {
    const auto p = params(w);
    CHECK(conditional_dressed_population(0.0, 1, p) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(conditional_dressed_population(0.0, -1, p) == 0.0);
    const double limit = conditional_dressed_population_limit(p);
    for (double t = 0.0; t < 6.0 / p.gamma_eff(); t += 43.0) {
      CHECK(std::abs(conditional_dressed_population(t, 1, p) / limit - g2_v_plus_plus_v(t, p)) <
            1e-12);
      CHECK(std::abs(conditional_dressed_population(t, -1, p) / limit - g2_v_plus_zero_v(t, p)) <
            1e-12);
    }
  }
}

TEST_CASE("conditional dressed populations from the general solutions") {
  // ⟨+|ρ|+⟩ with |+⟩ = (|G⟩ + |B⟩)/√2, for the state prepared by a V→± photon
  // (scaled by Σ₀ = 2, hence the extra 1/2).
  for (double w : kDrives) {
    const auto p = params(w);
    for (int sign : {1, -1}) {
      const auto ic = AdiabaticIC::dressed(sign);
      for (double t = 0.0; t < 6.0 / p.gamma_eff(); t += 71.0) {
        const double built =
            0.25 * (rho_bb(t, ic, p) + rho_gg(t, ic, p) + 2.0 * rho_bg(t, ic, p).real());
        CHECK(std::abs(built - conditional_dressed_population(t, sign, p)) < 1e-12);
      }
    }
    const double o = p.omega_eff(), g = p.gamma_eff();
    CHECK(std::abs(conditional_dressed_population_limit(p) -
                   (o * o + 2 * g * g) / (4 * (o * o + g * g))) < 1e-15);
  }
}

TEST_CASE("curve identities") {
  for (double w : kDrives) {
    const auto p = params(w);
    const double a = p.alpha(), g = p.gamma_eff(), o = p.omega_eff();
    for (double t = 0.0; t < 8.0 / g; t += 29.0) {
      CHECK(std::abs(g2_plus_vv_plus(t, p) - g2_bvvg(t, p)) <= 1e-15);
      CHECK(std::abs(g2_ex_forward(t, p) - g2_bvvg(t, p)) <= 1e-15);
      const double mix = 0.5 * (g2_v_plus_plus_v(t, p) + g2_v_plus_zero_v(t, p));
      const double display =
          1.0 + std::exp(-2 * g * t) - 2.0 * a * std::cos(o * t) * std::exp(-g * t) / (1.0 + 2.0 * a);
      CHECK(std::abs(mix - display) < 1e-12);
      CHECK(std::abs(g2_ex_backward(t, p) - display) < 1e-12);
      // Cosh form, evaluated directly where it cannot overflow.
      const double cosh_form =
          2.0 * std::exp(-g * t) * (1.0 + std::cosh(g * t) + a * (1.0 + std::cos(o * t)));
      CHECK(std::abs(g2_bvvg(t, p) - cosh_form) < 1e-12 * cosh_form);
      const double vggb_form = 2.0 * std::exp(-g * t) * (std::cosh(g * t) - std::cos(o * t));
      CHECK(std::abs(g2_vggb(t, p) - vggb_form) < 1e-12);
    }
    CHECK(std::isfinite(g2_bvvg(1e7, p)));
    CHECK(g2_bvvg(1e7, p) == doctest::Approx(1.0));
  }
}

TEST_CASE("degenerate and invalid inputs") {
  const SystemParams off(0.0, 3.0, 0.001);
  for (const auto& [n, f] : kCurves) {
    CAPTURE(n);
    CHECK_THROWS_AS(f(1.0, off), UndefinedAlpha);
    CHECK_THROWS_AS(f(-1.0, params(0.1)), std::invalid_argument);
  }
  CHECK_THROWS_AS(inversion_D(-1.0, generic_ic(), params(0.1)), std::invalid_argument);
  CHECK_THROWS_AS(conditional_dressed_population(1.0, 2, params(0.1)), std::invalid_argument);
}

TEST_CASE("Laplace transform pairs") {
  for (double w : kDrives) {
    const auto p = params(w);
    const double g = p.gamma_eff(), o = p.omega_eff();
    const double n = o * o + g * g;
    for (double s : {g, 2 * g, g + o}) {
      const double q = (s + g) * (s + g) + o * o;
      CAPTURE(s);
      const auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
      CHECK(rel(laplace([&](double t) { return std::exp(-g * t) * std::sin(o * t) / o; }, s),
                1.0 / q) < 1e-6);
      CHECK(rel(laplace([&](double t) { return std::exp(-g * t) * std::cos(o * t); }, s),
                (s + g) / q) < 1e-6);
      CHECK(rel(laplace(
                    [&](double t) {
                      return 1.0 / n - std::exp(-g * t) / o *
                                           (o * std::cos(o * t) + g * std::sin(o * t)) / n;
                    },
                    s),
                1.0 / (s * q)) < 1e-6);
      CHECK(rel(laplace(
                    [&](double t) {
                      return g / n + std::exp(-g * t) * (o * std::sin(o * t) - g * std::cos(o * t)) / n;
                    },
                    s),
                (s + g) / (s * q)) < 1e-6);

      // The implemented D(t), Im B(t) against their transforms.
      const auto ic = generic_ic();
      const double d_bar = ic.D0 * (s + g) / q + o * ic.B0_imag / q - ic.Sigma0 * g / s * (s + g) / q;
      const double b_bar = ic.B0_imag * (s + g) / q - o * ic.D0 / q + g * ic.Sigma0 * o / (s * q);
      CHECK(rel(laplace([&](double t) { return inversion_D(t, ic, p); }, s), d_bar) < 1e-6);
      CHECK(rel(laplace([&](double t) { return coherence_B(t, ic, p); }, s), b_bar) < 1e-6);
    }
  }
}

TEST_CASE("dressed eigensystem identities") {
  for (double w : {0.0, 0.01, 0.05, 0.1, 0.3, 1.0, 3.0}) {
    const auto p = params(w);
    const auto es = dressed_eigensystem(p);
    const double d = p.delta();
    CAPTURE(w);
    CHECK(es.e0 == 0.0);
    CHECK(es.e1 == d);
    CHECK(std::abs(es.e3 * es.e4 + 2.0 * w * w) < 1e-10);
    CHECK(std::abs(es.a3 - 1.0 / std::sqrt(2.0)) < 1e-15);
    if (w > 0.0) {
      CHECK(std::abs(es.a1 * es.a1 + es.a2 * es.a2 - 0.5) < 1e-12);
      CHECK(std::abs(es.a1 * es.a1 * es.e3 + es.a2 * es.a2 * es.e4) < 1e-12);
      CHECK(std::abs(es.a1 * es.a1 * es.e4 + es.a2 * es.a2 * es.e3 - 0.5 * d) < 1e-12);
      CHECK(std::abs(0.5 * es.e3 / (es.e3 - es.e4) - es.a2 * es.a2) < 1e-12);
      CHECK(std::abs(0.5 * es.e4 / (es.e4 - es.e3) - es.a1 * es.a1) < 1e-12);
    }

    const Operator h = build_hamiltonian(p);
    const std::array<DressedLabel, 4> labels = {DressedLabel::Plus, DressedLabel::Minus,
                                                DressedLabel::Zero, DressedLabel::V};
    for (auto a : labels) {
      const Ket& v = es.vector(a);
      CHECK((h * v - es.eigenvalue(a) * v).norm() < 1e-10);
      for (auto b : labels) {
        const double expected = a == b ? 1.0 : 0.0;
        CHECK(std::abs(v.dot(es.vector(b)) - expected) < 1e-12);
      }
    }

    Eigen::SelfAdjointEigenSolver<Operator> num(h);
    std::vector<double> closed = {es.e0, es.e1, es.e3, es.e4};
    std::sort(closed.begin(), closed.end());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(num.eigenvalues()(i) - closed[i]) < 1e-10);
  }
  const auto es0 = dressed_eigensystem(params(0.0));
  CHECK(es0.e3 == 3.0);
  CHECK(es0.e4 == 0.0);
}
