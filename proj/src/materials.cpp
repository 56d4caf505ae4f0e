#include "cavpol/materials.hpp"

#include <cmath>

#include "cavpol/constants.hpp"
#include "cavpol/errors.hpp"

namespace cavpol {

namespace {

constexpr double n_gaas = 3.64677;  // room temperature, 850 nm
constexpr double n_alas = 3.00153;

// hbar^2 / (2 m_e) in meV nm^2, so E_B = kinetic_scale / (mu a0^2).
const double kinetic_scale = constants::hbar * constants::hbar /
                             (2.0 * constants::electron_mass * 1e-18) *
                             constants::joule_to_mev;

}  // namespace

double binding_energy_mev(double reduced_mass, double bohr_radius_nm) {
    return kinetic_scale / (reduced_mass * bohr_radius_nm * bohr_radius_nm);
}

ExcitonParams make_exciton(const ExcitonInputs& in) {
    if (in.f2d_per_m2 <= 0.0)
        throw invalid_input("exciton: oscillator strength f_2D must be positive");
    if (in.total_mass <= 0.0 || in.eps_r <= 0.0 || in.bandgap_mev <= 0.0)
        throw invalid_input("exciton: total mass, eps_r and bandgap must be positive");

    int given = int(in.binding_mev.has_value()) + int(in.bohr_radius_nm.has_value()) +
                int(in.reduced_mass.has_value());
    if (given < 2)
        throw invalid_input(
            "exciton: supply at least two of {binding energy, Bohr radius, reduced mass}");
    for (auto v : {in.binding_mev, in.bohr_radius_nm, in.reduced_mass})
        if (v && *v <= 0.0) throw invalid_input("exciton: parameters must be positive");

    ExcitonParams p;
    p.f2d_per_m2 = in.f2d_per_m2;
    p.total_mass = in.total_mass;
    p.eps_r = in.eps_r;
    p.bandgap_mev = in.bandgap_mev;

    if (in.binding_mev && in.bohr_radius_nm) {
        p.binding_mev = *in.binding_mev;
        p.bohr_radius_nm = *in.bohr_radius_nm;
        p.reduced_mass = kinetic_scale / (p.binding_mev * p.bohr_radius_nm * p.bohr_radius_nm);
    } else if (in.binding_mev && in.reduced_mass) {
        p.binding_mev = *in.binding_mev;
        p.reduced_mass = *in.reduced_mass;
        p.bohr_radius_nm = std::sqrt(kinetic_scale / (p.reduced_mass * p.binding_mev));
    } else {
        p.bohr_radius_nm = *in.bohr_radius_nm;
        p.reduced_mass = *in.reduced_mass;
        p.binding_mev = binding_energy_mev(p.reduced_mass, p.bohr_radius_nm);
    }

    if (given == 3) {
        double derived = binding_energy_mev(*in.reduced_mass, *in.bohr_radius_nm);
        if (std::abs(derived - *in.binding_mev) > 1e-6 * (*in.binding_mev))
            throw invalid_input(
                "exciton: E_B, a0 and mu are inconsistent with E_B = hbar^2/(2 mu a0^2)");
        p.binding_mev = *in.binding_mev;
        p.bohr_radius_nm = *in.bohr_radius_nm;
        p.reduced_mass = *in.reduced_mass;
    }
    return p;
}

OpticalMaterial builtin_material(const std::string& name) {
    if (name == "GaAs") return {name, n_gaas};
    if (name == "AlAs") return {name, n_alas};
    if (name == "Air") return {name, 1.0};
    if (name.rfind("AlGaAs(", 0) == 0 && name.back() == ')') {
        std::string arg = name.substr(7, name.size() - 8);
        double x = 0.0;
        try {
            std::size_t pos = 0;
            x = std::stod(arg, &pos);
            if (pos != arg.size()) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw invalid_input("unparsable Ga fraction in '" + name + "'");
        }
        if (x < 0.0 || x > 1.0)
            throw invalid_input("AlGaAs Ga fraction must lie in [0, 1], got " + arg);
        return {name, n_alas + x * (n_gaas - n_alas)};
    }
    throw invalid_input("unknown material '" + name +
                        "'; available: GaAs, AlAs, Air, AlGaAs(x)");
}

ExcitonParams builtin_exciton(const std::string& name) {
    // E_B ~ 10 meV and a0 = 10 nm for GaAs-system QW excitons; the reduced
    // mass follows from the consistency relation. M, eps_r are standard GaAs
    // values and are configuration defaults, not measured inputs.
    ExcitonInputs in;
    in.binding_mev = 10.0;
    in.bohr_radius_nm = 10.0;
    if (name == "GaAsQW") {
        in.f2d_per_m2 = 7e16;
        return make_exciton(in);
    }
    if (name == "InGaAsQW") {
        in.f2d_per_m2 = 4.8e12 * constants::per_cm2_to_per_m2;
        return make_exciton(in);
    }
    throw invalid_input("unknown exciton '" + name + "'; available: GaAsQW, InGaAsQW");
}

}  // namespace cavpol
