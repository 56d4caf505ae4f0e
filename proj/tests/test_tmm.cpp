#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cavpol/coupling.hpp"
#include "cavpol/errors.hpp"
#include "cavpol/materials.hpp"
#include "cavpol/numerics.hpp"
#include "cavpol/stack.hpp"
#include "cavpol/tmm.hpp"
#include "oracles.hpp"

using namespace cavpol;

namespace {

const OpticalMaterial gaas = builtin_material("GaAs");
const OpticalMaterial alas = builtin_material("AlAs");

LayerStack bare_mirror(int pairs) {
    LayerStack s;
    for (int p = 0; p < pairs; ++p) {
        s.layers.push_back({gaas, 850.0 / (4.0 * gaas.refractive_index)});
        s.layers.push_back({alas, 850.0 / (4.0 * alas.refractive_index)});
    }
    return s;
}

LayerStack random_stack(std::mt19937& rng) {
    std::uniform_int_distribution<int> layers(1, 12);
    std::uniform_real_distribution<double> thickness(20.0, 300.0);
    std::uniform_real_distribution<double> ga(0.0, 1.0);
    LayerStack s;
    int n = layers(rng);
    for (int i = 0; i < n; ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "AlGaAs(%.3f)", ga(rng));
        s.layers.push_back({builtin_material(name), thickness(rng)});
    }
    return s;
}

}  // namespace

TEST_SUITE_BEGIN("tmm");

TEST_CASE("single interface reproduces the Fresnel reflectance at any wavelength") {
    LayerStack s;  // no layers: bare air | GaAs interface
    s.ambient_back = gaas;
    double expected = oracle::fresnel_reflectance(1.0, gaas.refractive_index);
    for (double lambda : {400.0, 850.0, 1600.0}) {
        auto [r, t] = reflect_transmit(s, lambda);
        CHECK(std::abs(r - expected) < 1e-12);
        CHECK(std::abs(r + t - 1.0) < 1e-12);
    }
}

TEST_CASE("zero-thickness stack with matched ambients transmits fully") {
    LayerStack s;
    auto [r, t] = reflect_transmit(s, 850.0);
    CHECK(r == doctest::Approx(0.0));
    CHECK(t == doctest::Approx(1.0));
}

TEST_CASE("20-pair quarter-wave mirror matches the closed-form Bragg reflectance") {
    LayerStack s = bare_mirror(20);
    auto [r, t] = reflect_transmit(s, 850.0);
    double expected =
        oracle::bragg_reflectance(1.0, gaas.refractive_index, alas.refractive_index, 1.0, 20);
    CHECK(std::abs(r - expected) < 1e-6);
}

TEST_CASE("energy conservation and reciprocity on random lossless stacks") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> wl(500.0, 1500.0);
    for (int trial = 0; trial < 50; ++trial) {
        LayerStack s = random_stack(rng);
        if (trial % 2) s.ambient_back = gaas;
        LayerStack rev = reversed(s);
        double lambda = wl(rng);
        auto [r, t] = reflect_transmit(s, lambda);
        auto [rr, tr] = reflect_transmit(rev, lambda);
        CHECK(std::abs(r + t - 1.0) < 1e-12);
        CHECK(t == doctest::Approx(tr).epsilon(1e-10));
    }
}

TEST_CASE("spectrum sampling: endpoints, count, parallel equals serial") {
    LayerStack s = bare_mirror(8);
    auto ser = spectrum(s, 700.0, 1000.0, 61, Exec::Serial);
    auto par = spectrum(s, 700.0, 1000.0, 61, Exec::Parallel);
    REQUIRE(ser.size() == 61);
    CHECK(ser.front().lambda_nm == doctest::Approx(700.0));
    CHECK(ser.back().lambda_nm == doctest::Approx(1000.0));
    for (std::size_t i = 0; i < ser.size(); ++i) {
        CHECK(ser[i].reflectance == par[i].reflectance);
        CHECK(ser[i].transmittance == par[i].transmittance);
        CHECK(std::abs(ser[i].reflectance + ser[i].transmittance - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(spectrum(s, 700.0, 1000.0, 1), invalid_input);
}

TEST_CASE("resonance of the symmetric s=1 cavity sits at the design wavelength") {
    LayerStack s = build_dbr_cavity(gaas, gaas, alas, 1, 16, 16, 850.0);
    ResonanceResult r = find_resonance(s, 850.0, 5.0);
    CHECK(std::abs(r.lambda_nm - 850.0) < 0.5);
    CHECK(r.quality * r.linewidth_nm == doctest::Approx(r.lambda_nm).epsilon(1e-9));
}

TEST_CASE("quality factor increases strictly with mirror pairs") {
    double prev = 0.0;
    for (int pairs : {8, 12, 16}) {
        LayerStack s = build_dbr_cavity(gaas, gaas, alas, 1, pairs, pairs, 850.0);
        ResonanceResult r = find_resonance(s, 850.0, 5.0);
        CHECK(r.quality > prev);
        prev = r.quality;
    }
}

TEST_CASE("a monotone transmission window has no peak to find") {
    LayerStack s = bare_mirror(10);
    // deep in the stopband the transmission is flat-to-monotone over 2 nm
    CHECK_THROWS_AS(find_resonance(s, 850.0, 1.0), numerical_error);
}

TEST_CASE("field is continuous across every interface") {
    LayerStack s = build_dbr_cavity(gaas, gaas, alas, 2, 10, 10, 850.0);
    FieldSolution sol = solve_field(s, 851.3);
    // evaluate both regions exactly at the shared interface position
    for (std::size_t j = 0; j + 1 < s.layers.size(); ++j) {
        double z = sol.region_start_nm[j + 2];
        double d = s.layers[j].thickness_nm;
        auto value = [&](std::size_t region, double local) {
            std::complex<double> i_kz{0.0, sol.wavenumber_per_nm[region] * local};
            return std::abs(sol.forward[region] * std::exp(i_kz) +
                            sol.backward[region] * std::exp(-i_kz));
        };
        double below = value(j + 1, d);
        double above = value(j + 2, 0.0);
        CHECK(std::abs(below - above) <= 1e-10 * std::max(1.0, below));
        (void)z;
    }
}

TEST_CASE("stopband field decays monotonically into a bare mirror") {
    LayerStack s = bare_mirror(16);
    FieldProfile prof = field_profile(s, 850.0);
    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < prof.amplitude.size(); ++i)
        if (prof.amplitude[i] > prof.amplitude[i - 1] &&
            prof.amplitude[i] >= prof.amplitude[i + 1])
            peaks.push_back(prof.amplitude[i]);
    REQUIRE(peaks.size() >= 8);
    for (std::size_t i = 1; i + 2 < peaks.size(); ++i) CHECK(peaks[i] < peaks[i - 1]);
}

TEST_CASE("resonant field maximum lives in the cavity; its position follows the cavity kind") {
    // Low-index cavity: the high-index mirror enforces edge nodes, so the
    // s=1 antinode sits at the cavity center, exactly the perfect-mirror
    // standing-wave picture.
    LayerStack low = build_dbr_cavity(alas, gaas, alas, 1, 14, 14, 850.0);
    ResonanceResult rl = find_resonance(low, 850.0, 5.0);
    FieldProfile pl = field_profile(low, rl.lambda_nm);
    std::size_t imax = 0;
    for (std::size_t i = 0; i < pl.amplitude.size(); ++i)
        if (pl.amplitude[i] > pl.amplitude[imax]) imax = i;
    double center = low.layer_start_nm(*low.cavity_index) +
                    0.5 * low.layers[*low.cavity_index].thickness_nm;
    CHECK(std::abs(pl.z_nm[imax] - center) < 2.0);
    CHECK(pl.layer_id[imax] == int(*low.cavity_index));

    // High-index cavity: the low-index mirror enforces edge antinodes, so
    // the global maxima sit at the cavity boundaries instead.
    LayerStack high = build_dbr_cavity(gaas, gaas, alas, 1, 12, 12, 850.0);
    ResonanceResult rh = find_resonance(high, 850.0, 5.0);
    FieldProfile ph = field_profile(high, rh.lambda_nm);
    imax = 0;
    for (std::size_t i = 0; i < ph.amplitude.size(); ++i)
        if (ph.amplitude[i] > ph.amplitude[imax]) imax = i;
    double cavity_start = high.layer_start_nm(*high.cavity_index);
    double cavity_end = cavity_start + high.layers[*high.cavity_index].thickness_nm;
    bool at_edge = std::abs(ph.z_nm[imax] - cavity_start) < 2.0 ||
                   std::abs(ph.z_nm[imax] - cavity_end) < 2.0;
    CHECK(at_edge);
}

TEST_CASE("mirror envelope decay rate matches the quarter-wave attenuation constant") {
    // fit ln|E|^2 over the front Bloch-decay region, away from the
    // transmitted-wave floor near the back surface
    LayerStack s = bare_mirror(20);
    FieldProfile prof = field_profile(s, 850.0);
    double fit_depth = 0.55 * s.total_thickness_nm();
    std::vector<double> zs, log_intensity;
    for (std::size_t i = 1; i + 1 < prof.z_nm.size(); ++i) {
        if (prof.z_nm[i] > fit_depth) break;
        if (prof.amplitude[i] > prof.amplitude[i - 1] &&
            prof.amplitude[i] >= prof.amplitude[i + 1]) {
            zs.push_back(prof.z_nm[i]);
            log_intensity.push_back(2.0 * std::log(prof.amplitude[i]));
        }
    }
    REQUIRE(zs.size() >= 5);
    double a = dbr_effective_params(gaas.refractive_index, alas.refractive_index, 850.0).a_per_nm;
    CHECK(std::abs(-num::fit_slope(zs, log_intensity) - a) < 0.10 * a);
}

TEST_CASE("effective length of an analytic standing wave is half the physical length") {
    // perfect-mirror cavity emulated by a hand-built sine profile
    const double length = 200.0;
    LayerStack s;
    s.layers.push_back({gaas, length});
    FieldProfile prof;
    prof.lambda_nm = 850.0;
    const int n = 2001;
    for (int i = 0; i < n; ++i) {
        double z = length * i / (n - 1);
        prof.z_nm.push_back(z);
        prof.amplitude.push_back(std::abs(std::sin(std::numbers::pi * z / length)));
        prof.index.push_back(gaas.refractive_index);
        prof.layer_id.push_back(0);
    }
    CHECK(mode_effective_length(s, prof) == doctest::Approx(length / 2.0).epsilon(1e-5));
}

TEST_CASE("numeric effective length tracks the closed-form expansion within 5%") {
    LayerStack s = build_dbr_cavity(gaas, gaas, alas, 1, 24, 24, 850.0);
    ResonanceResult r = find_resonance(s, 850.0, 5.0);
    FieldProfile prof = field_profile(s, r.lambda_nm);
    auto [l_eff, l_int] = mode_effective_lengths(s, prof);
    CouplingResult closed =
        analytic_g(gaas.refractive_index, alas.refractive_index, CavityKind::HighIndex, 1, 1,
                   4.8e16, 850.0);
    CHECK(std::abs(l_eff - closed.l_eff_nm) < 0.05 * closed.l_eff_nm);
    CHECK(l_int == doctest::Approx(closed.l_int_nm).epsilon(0.02));
}

TEST_CASE("stronger index contrast shrinks the external effective length") {
    auto l_ext_for = [&](const char* lo_name) {
        OpticalMaterial lo = builtin_material(lo_name);
        LayerStack s = build_dbr_cavity(gaas, gaas, lo, 1, 30, 30, 850.0);
        ResonanceResult r = find_resonance(s, 850.0, 5.0);
        FieldProfile prof = field_profile(s, r.lambda_nm);
        auto [l_eff, l_int] = mode_effective_lengths(s, prof);
        return l_eff - l_int;
    };
    CHECK(l_ext_for("AlAs") < l_ext_for("AlGaAs(0.4)"));
}

TEST_CASE("doubling the sample density moves the effective length by well under 0.1%") {
    LayerStack s = build_dbr_cavity(gaas, gaas, alas, 1, 16, 16, 850.0);
    ResonanceResult r = find_resonance(s, 850.0, 5.0);
    double coarse = mode_effective_length(s, field_profile(s, r.lambda_nm, 64));
    double fine = mode_effective_length(s, field_profile(s, r.lambda_nm, 128));
    CHECK(std::abs(fine - coarse) < 1e-3 * coarse);
}

TEST_SUITE_END();
