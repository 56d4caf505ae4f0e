#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cavpol/exec.hpp"
#include "cavpol/stack.hpp"

namespace cavpol {

/// Sampled |E(z)| at a fixed wavelength, normalized to unit maximum.
/// layer_id is -1 in the front ambient and layer count in the back ambient.
struct FieldProfile {
    std::vector<double> z_nm;        // strictly increasing
    std::vector<double> amplitude;   // |E|, max = 1
    std::vector<double> index;       // n(z) at each sample
    std::vector<int> layer_id;
    double lambda_nm = 0.0;
};

struct ResonanceResult {
    double lambda_nm = 0.0;
    double quality = 0.0;
    double linewidth_nm = 0.0;  // transmission FWHM; quality * linewidth = lambda
};

struct SpectrumPoint {
    double lambda_nm = 0.0;
    double reflectance = 0.0;
    double transmittance = 0.0;
};

/// Exact plane-wave solution at one wavelength: complex forward/backward
/// amplitudes per layer (plus ambients), in units of unit transmitted wave.
struct FieldSolution {
    std::vector<std::complex<double>> forward;   // size layers + 2, [0] = front ambient
    std::vector<std::complex<double>> backward;
    std::vector<double> wavenumber_per_nm;       // k = 2 pi n / lambda per region
    std::vector<double> region_start_nm;         // front ambient uses z <= 0
    double lambda_nm = 0.0;

    double amplitude_at(double z_nm) const;  // |E|, unnormalized
    double reflectance() const;
    double transmittance() const;
};

FieldSolution solve_field(const LayerStack& stack, double lambda_nm);

/// (R, T) at normal incidence; lossless media, so R + T = 1.
std::pair<double, double> reflect_transmit(const LayerStack& stack, double lambda_nm);

std::vector<SpectrumPoint> spectrum(const LayerStack& stack, double lambda_min_nm,
                                    double lambda_max_nm, int points,
                                    Exec exec = Exec::Parallel);

/// Transmission-peak search in [guess - window, guess + window], refined to
/// 1e-4 nm; Q from the full width at half maximum of the peak.
ResonanceResult find_resonance(const LayerStack& stack, double lambda_guess_nm,
                               double window_nm);

/// Standing-wave profile sampled on a per-layer uniform grid, optionally
/// extended margin_nm into each ambient at comparable sample density.
FieldProfile field_profile(const LayerStack& stack, double lambda_nm,
                           int samples_per_layer = 64, double margin_nm = 0.0);

/// Mode effective length
///   L_eff = integral |E|^2 dz / max |E|^2,
/// by layer-wise trapezoidal quadrature on the profile grid. Ambient margin
/// samples are excluded; only the confined mode counts.
double mode_effective_length(const LayerStack& stack, const FieldProfile& profile);

/// Same integral split into the cavity-layer part and the rest; returns
/// {L_eff, L_int}. L_int is 0 when the stack has no designated cavity layer.
std::pair<double, double> mode_effective_lengths(const LayerStack& stack,
                                                 const FieldProfile& profile);

}  // namespace cavpol
