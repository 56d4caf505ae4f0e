#include <doctest.h>

#include "cavpol/constants.hpp"
#include "cavpol/errors.hpp"
#include "cavpol/materials.hpp"

using namespace cavpol;

TEST_SUITE_BEGIN("materials");

TEST_CASE("builtin optical materials carry the design-wavelength indices") {
    CHECK(builtin_material("GaAs").refractive_index == doctest::Approx(3.64677).epsilon(1e-12));
    CHECK(builtin_material("AlAs").refractive_index == doctest::Approx(3.00153).epsilon(1e-12));
    CHECK(builtin_material("Air").refractive_index == doctest::Approx(1.0));
}

TEST_CASE("AlGaAs interpolates linearly in the Ga fraction") {
    CHECK(builtin_material("AlGaAs(0.5)").refractive_index ==
          doctest::Approx(3.32415).epsilon(1e-9));
    CHECK(builtin_material("AlGaAs(0)").refractive_index == doctest::Approx(3.00153));
    CHECK(builtin_material("AlGaAs(1)").refractive_index == doctest::Approx(3.64677));
}

TEST_CASE("unknown or malformed material names are rejected with the available set") {
    CHECK_THROWS_WITH_AS(builtin_material("InP"),
                         "unknown material 'InP'; available: GaAs, AlAs, Air, AlGaAs(x)",
                         invalid_input);
    CHECK_THROWS_AS(builtin_material("AlGaAs(1.5)"), invalid_input);
    CHECK_THROWS_AS(builtin_material("AlGaAs(abc)"), invalid_input);
}

TEST_CASE("builtin excitons: oscillator strengths and binding energy") {
    ExcitonParams gaas = builtin_exciton("GaAsQW");
    ExcitonParams ingaas = builtin_exciton("InGaAsQW");
    CHECK(gaas.f2d_per_m2 == doctest::Approx(7e16));
    // 4.8e12 cm^-2, converted exactly
    CHECK(ingaas.f2d_per_m2 == doctest::Approx(4.8e16));
    CHECK(gaas.binding_mev == doctest::Approx(10.0));
    CHECK(ingaas.binding_mev == doctest::Approx(10.0));
    CHECK_THROWS_AS(builtin_exciton("CdTeQW"), invalid_input);
}

TEST_CASE("consistency relation E_B = hbar^2/(2 mu a0^2) holds on every path") {
    ExcitonParams p = builtin_exciton("GaAsQW");
    CHECK(binding_energy_mev(p.reduced_mass, p.bohr_radius_nm) ==
          doctest::Approx(p.binding_mev).epsilon(1e-9));

    ExcitonInputs from_mass;
    from_mass.f2d_per_m2 = 7e16;
    from_mass.binding_mev = 10.0;
    from_mass.reduced_mass = 0.0583172;
    ExcitonParams q = make_exciton(from_mass);
    CHECK(binding_energy_mev(q.reduced_mass, q.bohr_radius_nm) ==
          doctest::Approx(10.0).epsilon(1e-9));
    // mu = (1/0.067 + 1/0.45)^-1 with E_B = 10 meV puts a0 near 8.08 nm
    CHECK(q.bohr_radius_nm == doctest::Approx(8.083).epsilon(1e-3));

    ExcitonInputs from_radius;
    from_radius.f2d_per_m2 = 7e16;
    from_radius.bohr_radius_nm = 10.0;
    from_radius.reduced_mass = 0.038;
    ExcitonParams r = make_exciton(from_radius);
    CHECK(binding_energy_mev(r.reduced_mass, r.bohr_radius_nm) ==
          doctest::Approx(r.binding_mev).epsilon(1e-12));
}

TEST_CASE("overriding the Bohr radius re-derives the reduced mass") {
    ExcitonParams base = builtin_exciton("GaAsQW");
    ExcitonInputs in;
    in.f2d_per_m2 = base.f2d_per_m2;
    in.binding_mev = base.binding_mev;
    in.bohr_radius_nm = 8.0;
    ExcitonParams p = make_exciton(in);
    CHECK(p.reduced_mass ==
          doctest::Approx(base.reduced_mass * 100.0 / 64.0).epsilon(1e-9));
    CHECK(binding_energy_mev(p.reduced_mass, p.bohr_radius_nm) ==
          doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("inconsistent triple and nonpositive values are rejected") {
    ExcitonInputs in;
    in.f2d_per_m2 = 7e16;
    in.binding_mev = 10.0;
    in.bohr_radius_nm = 10.0;
    in.reduced_mass = 0.3;  // far from the consistent 0.038
    CHECK_THROWS_AS(make_exciton(in), invalid_input);

    ExcitonInputs missing;
    missing.f2d_per_m2 = 7e16;
    missing.binding_mev = 10.0;
    CHECK_THROWS_AS(make_exciton(missing), invalid_input);

    ExcitonInputs negative;
    negative.f2d_per_m2 = -1.0;
    negative.binding_mev = 10.0;
    negative.bohr_radius_nm = 10.0;
    CHECK_THROWS_AS(make_exciton(negative), invalid_input);
}

TEST_CASE("areal density conversions are exact") {
    CHECK(4.8e12 * constants::per_cm2_to_per_m2 == 4.8e16);
    CHECK(4.8e16 * constants::per_m2_to_per_cm2 == 4.8e12);
}

TEST_SUITE_END();
