#include <doctest.h>

#include <cmath>

#include "cavpol/constants.hpp"
#include "cavpol/errors.hpp"
#include "cavpol/materials.hpp"
#include "cavpol/stability.hpp"

using namespace cavpol;

namespace {
const ExcitonParams qw = builtin_exciton("GaAsQW");
const double hw0 = constants::photon_energy_mev(850.0);  // 1458.64 meV
const DetuningSpec resonant{0.0, hw0, 0.0134};
const BroadeningParams defaults;
}  // namespace

TEST_SUITE_BEGIN("stability");

TEST_CASE("phonon broadening: endpoints and the 300 K anchor") {
    CHECK(phonon_broadening(0.0, defaults) == 0.0);
    CHECK(std::abs(phonon_broadening(300.0, defaults) - 6.35) < 0.02);
    CHECK_THROWS_AS(phonon_broadening(-1.0, defaults), invalid_input);

    // at 100 K the acoustic term dominates the LO term
    BroadeningParams acoustic_only = defaults;
    acoustic_only.gamma_lo_mev = 0.0;
    double acoustic = phonon_broadening(100.0, acoustic_only);
    double lo = phonon_broadening(100.0, defaults) - acoustic;
    CHECK(acoustic == doctest::Approx(0.44).epsilon(1e-9));
    CHECK(lo < acoustic);
}

TEST_CASE("radiative LP lifetime") {
    double tau = lp_lifetime(0.5, defaults, hw0);
    CHECK(tau == doctest::Approx(3.6e-12).epsilon(0.01));  // ~3.6 ps at Q = 4000
    CHECK(lp_lifetime(1.0, defaults, hw0) == doctest::Approx(0.506e-9).epsilon(0.01));
    BroadeningParams lossless = defaults;
    lossless.quality = 1e300;
    CHECK(lp_lifetime(0.0, lossless, hw0) > 1e100);
    CHECK_THROWS_AS(lp_lifetime(1.5, defaults, hw0), invalid_input);
}

TEST_CASE("LP linewidth composition") {
    CHECK(lp_linewidth(0.0, 5.0, defaults, hw0) ==
          doctest::Approx(hw0 / 4000.0).epsilon(1e-12));
    CHECK(lp_linewidth(1.0, 0.0, defaults, hw0) == doctest::Approx(1.0013).epsilon(1e-9));
    double gamma_pm = phonon_broadening(300.0, defaults);
    double expected = 0.5 * (1.0 + gamma_pm + 0.0013) + 0.5 * hw0 / 4000.0;
    CHECK(lp_linewidth(0.5, gamma_pm, defaults, hw0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("dissociation probability: frozen limit and deep-binding limit") {
    PolaritonSolution lp = solve_variational(1.0, resonant, 0.0, qw);
    CHECK(dissociation_probability(0.0, lp, qw, defaults, hw0).value == 0.0);

    // an arbitrarily deep polariton never dissociates
    PolaritonSolution deep = lp;
    deep.bohr_reduction = 1e9;
    CHECK(dissociation_probability(300.0, deep, qw, defaults, hw0).value < 1e-8);

    // probability is assembled from the same broadening pieces it quotes
    double gamma_pm = phonon_broadening(300.0, defaults);
    double gamma_lp = lp_linewidth(lp.exciton_fraction, gamma_pm, defaults, hw0);
    double depth = lp.bohr_reduction * qw.binding_mev;
    double expected = lp.exciton_fraction * (gamma_pm / gamma_lp) *
                      (0.5 - std::atan(depth / (0.5 * gamma_lp)) / std::numbers::pi);
    CHECK(dissociation_probability(300.0, lp, qw, defaults, hw0).value ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("probability is continuous, nondecreasing in T and clamped into [0, 1]") {
    PolaritonSolution lp = solve_variational(0.6, resonant, 0.0, qw);
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        double t = 1.0 + i * (1200.0 - 1.0) / 200;
        auto p = dissociation_probability(t, lp, qw, defaults, hw0);
        CHECK(p.value >= prev);
        CHECK(p.value <= 1.0);
        CHECK(p.value >= 0.0);
        prev = p.value;
    }

    // the collision count per coherence time is bounded by gamma_pm/gamma_LP
    // <= 1/alpha^2, so the raw probability never exceeds one half; the
    // clamp path stays dormant and the raw value is always reported
    PolaritonSolution fragile = lp;
    fragile.bohr_reduction = 1e-9;  // vanishing binding: worst case
    auto worst = dissociation_probability(1500.0, fragile, qw, defaults, hw0);
    CHECK(worst.unclamped <= 0.5);
    CHECK(!worst.clamped);
    CHECK(worst.value == worst.unclamped);
}

TEST_CASE("dissociation temperature at the paper's operating point") {
    // with g at the binding energy the polariton survives to near room
    // temperature; a modest increase puts it over 300 K
    double t10 = dissociation_temperature(1.0, resonant, qw, defaults, 0.01);
    CHECK(t10 > 270.0);
    double t115 = dissociation_temperature(1.15, resonant, qw, defaults, 0.01);
    CHECK(t115 > 300.0);
}

TEST_CASE("dissociation temperature grows monotonically with the coupling") {
    double prev = 0.0;
    for (double g_mev : {2.0, 6.0, 10.0, 14.0, 18.0}) {
        double td = dissociation_temperature(g_mev / qw.binding_mev, resonant, qw, defaults,
                                             0.01);
        CHECK(td > prev);
        prev = td;
    }
}

TEST_CASE("threshold semantics and bracket failures") {
    CHECK(dissociation_temperature(1.0, resonant, qw, defaults, 0.05) >
          dissociation_temperature(1.0, resonant, qw, defaults, 0.01));
    // near-unity threshold is never reached inside the bracket
    CHECK_THROWS_WITH_AS(
        dissociation_temperature(1.0, resonant, qw, defaults, 0.999),
        "dissociation_temperature: stable beyond bracket (P < threshold at 2000 K)",
        numerical_error);
    CHECK_THROWS_AS(dissociation_temperature(1.0, resonant, qw, defaults, 0.0), invalid_input);
}

TEST_CASE("depth-to-halfwidth ratio diverges as the linewidth closes") {
    BroadeningParams narrow = defaults;
    narrow.gamma_inh_mev = 1e-9;
    narrow.gamma_ex_mev = 1e-12;
    narrow.quality = 1e12;
    CHECK(lp_depth_to_halfwidth_ratio(1.0, resonant, qw, narrow, 0.0) > 1e8);

    // monotone increasing along the coupling axis at the dissociation point
    double prev = 0.0;
    for (double g_mev : {6.0, 10.0, 14.0, 18.0}) {
        double gamma = g_mev / qw.binding_mev;
        double td = dissociation_temperature(gamma, resonant, qw, defaults, 0.01);
        double ratio = lp_depth_to_halfwidth_ratio(gamma, resonant, qw, defaults, td);
        CHECK(ratio > prev);
        CHECK(std::isfinite(ratio));
        prev = ratio;
    }
}

TEST_CASE("dimensional audit: broadening times lifetime over hbar is a pure number") {
    double gamma_pm = phonon_broadening(300.0, defaults);  // meV
    double tau = lp_lifetime(0.5, defaults, hw0);          // seconds
    double collisions = gamma_pm * tau / constants::hbar_mev_s;
    CHECK(collisions == doctest::Approx(gamma_pm / (0.5 * defaults.gamma_ex_mev +
                                                    0.5 * hw0 / defaults.quality))
                            .epsilon(1e-12));
    CHECK(collisions > 1.0);  // tens of collisions per lifetime at 300 K
}

TEST_CASE("saturation density: direct value and scaling") {
    PolaritonSolution unit;
    unit.exciton_fraction = 1.0;
    unit.photon_fraction = 0.0;
    unit.bohr_reduction = 1.0;
    ExcitonInputs in;
    in.f2d_per_m2 = 7e16;
    in.binding_mev = 10.0;
    in.bohr_radius_nm = 10.0;
    ExcitonParams exciton = make_exciton(in);
    double base = saturation_density(unit, exciton);
    CHECK(base == doctest::Approx(3.537e10).epsilon(1e-3));  // 1/(9 pi (10 nm)^2)

    PolaritonSolution shrunk = unit;
    shrunk.bohr_reduction = 2.0;
    CHECK(saturation_density(shrunk, exciton) == doctest::Approx(4.0 * base).epsilon(1e-12));

    // optimized very-strong-coupling structures clear 1e12 per QW
    PolaritonSolution strong = solve_variational(1.58, resonant, 0.0, qw);
    CHECK(saturation_density(strong, qw) > 1e12);
}

TEST_SUITE_END();
