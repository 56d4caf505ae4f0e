#include "cavpol/tmm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cavpol/errors.hpp"
#include "cavpol/numerics.hpp"

namespace cavpol {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

double FieldSolution::amplitude_at(double z_nm) const {
    std::size_t n_regions = forward.size();
    std::size_t r = 0;
    if (z_nm <= 0.0) {
        r = 0;
    } else {
        r = n_regions - 1;
        for (std::size_t j = 1; j + 1 < n_regions; ++j) {
            if (z_nm <= region_start_nm[j + 1]) {
                r = j;
                break;
            }
        }
    }
    double local = z_nm - region_start_nm[r];
    double k = wavenumber_per_nm[r];
    std::complex<double> e =
        forward[r] * std::exp(I * k * local) + backward[r] * std::exp(-I * k * local);
    return std::abs(e);
}

double FieldSolution::reflectance() const {
    return std::norm(backward.front() / forward.front());
}

double FieldSolution::transmittance() const {
    double nf = wavenumber_per_nm.front(), nb = wavenumber_per_nm.back();
    return (nb / nf) * std::norm(forward.back() / forward.front());
}

FieldSolution solve_field(const LayerStack& stack, double lambda_nm) {
    if (lambda_nm <= 0.0) throw invalid_input("solve_field: wavelength must be positive");
    const std::size_t n = stack.layers.size();
    FieldSolution sol;
    sol.lambda_nm = lambda_nm;
    sol.forward.resize(n + 2);
    sol.backward.resize(n + 2);
    sol.wavenumber_per_nm.resize(n + 2);
    sol.region_start_nm.resize(n + 2);

    const double two_pi = 2.0 * std::numbers::pi;
    sol.wavenumber_per_nm[0] = two_pi * stack.ambient_front.refractive_index / lambda_nm;
    double z = 0.0;
    sol.region_start_nm[0] = 0.0;  // front ambient: z <= 0, local coordinate from 0
    for (std::size_t j = 0; j < n; ++j) {
        sol.region_start_nm[j + 1] = z;
        sol.wavenumber_per_nm[j + 1] = two_pi * stack.layers[j].material.refractive_index / lambda_nm;
        z += stack.layers[j].thickness_nm;
    }
    sol.region_start_nm[n + 1] = z;
    sol.wavenumber_per_nm[n + 1] = two_pi * stack.ambient_back.refractive_index / lambda_nm;

    // Unit transmitted wave in the back ambient, then walk the interface
    // continuity conditions (E and E' continuous) toward the front.
    sol.forward[n + 1] = 1.0;
    sol.backward[n + 1] = 0.0;
    for (std::size_t j = n + 1; j-- > 0;) {
        double k_this = sol.wavenumber_per_nm[j];
        double k_next = sol.wavenumber_per_nm[j + 1];
        std::complex<double> s = sol.forward[j + 1] + sol.backward[j + 1];
        std::complex<double> d = (k_next / k_this) * (sol.forward[j + 1] - sol.backward[j + 1]);
        double thickness =
            (j == 0) ? 0.0 : sol.region_start_nm[j + 1] - sol.region_start_nm[j];
        std::complex<double> phase = std::exp(I * k_this * thickness);
        sol.forward[j] = 0.5 * (s + d) / phase;
        sol.backward[j] = 0.5 * (s - d) * phase;
    }
    return sol;
}

std::pair<double, double> reflect_transmit(const LayerStack& stack, double lambda_nm) {
    FieldSolution sol = solve_field(stack, lambda_nm);
    return {sol.reflectance(), sol.transmittance()};
}

std::vector<SpectrumPoint> spectrum(const LayerStack& stack, double lambda_min_nm,
                                    double lambda_max_nm, int points, Exec exec) {
    if (lambda_min_nm <= 0.0 || lambda_max_nm < lambda_min_nm)
        throw invalid_input("spectrum: wavelength range must be positive and increasing");
    if (points < 2) throw invalid_input("spectrum: need at least 2 sample points");

    std::vector<SpectrumPoint> out(points);
    double step = (lambda_max_nm - lambda_min_nm) / (points - 1);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < points; ++i) {
            double lambda = lambda_min_nm + i * step;
            auto [r, t] = reflect_transmit(stack, lambda);
            out[i] = {lambda, r, t};
        }
    } else {
        for (int i = 0; i < points; ++i) {
            double lambda = lambda_min_nm + i * step;
            auto [r, t] = reflect_transmit(stack, lambda);
            out[i] = {lambda, r, t};
        }
    }
    return out;
}

ResonanceResult find_resonance(const LayerStack& stack, double lambda_guess_nm,
                               double window_nm) {
    if (window_nm <= 0.0) throw invalid_input("find_resonance: window must be positive");
    double lo = lambda_guess_nm - window_nm, hi = lambda_guess_nm + window_nm;
    if (lo <= 0.0) throw invalid_input("find_resonance: window extends to nonpositive wavelength");

    auto transmission = [&stack](double lambda) {
        return reflect_transmit(stack, lambda).second;
    };

    // Reject windows where transmission is monotone (peak at an edge).
    {
        const int coarse = 257;
        double best = -1.0;
        int best_i = 0;
        for (int i = 0; i < coarse; ++i) {
            double lambda = lo + (hi - lo) * i / (coarse - 1);
            double t = transmission(lambda);
            if (t > best) {
                best = t;
                best_i = i;
            }
        }
        if (best_i == 0 || best_i == coarse - 1)
            throw numerical_error("find_resonance: no transmission peak inside the window");
    }

    double lambda_res = num::scan_maximize(transmission, lo, hi, 1e-5);
    double t_peak = transmission(lambda_res);
    double half = 0.5 * t_peak;

    // The window bounds the peak search; the width measurement may walk
    // past it for low-Q peaks whose wings are wider than the window.
    double reach = std::max(2.0 * window_nm, 0.25 * lambda_res);
    auto crossing = [&](double direction) {
        double step = 1e-3;
        double inner = lambda_res;
        double outer = lambda_res + direction * step;
        while (transmission(outer) > half) {
            inner = outer;
            step *= 2.0;
            outer = lambda_res + direction * step;
            if (std::abs(outer - lambda_res) > reach)
                throw numerical_error("find_resonance: half maximum not reached near the peak");
        }
        return num::bisect([&](double x) { return transmission(x) - half; },
                           std::min(inner, outer), std::max(inner, outer), 1e-7);
    };
    double left = crossing(-1.0);
    double right = crossing(+1.0);

    ResonanceResult res;
    res.lambda_nm = lambda_res;
    res.linewidth_nm = right - left;
    res.quality = lambda_res / res.linewidth_nm;
    return res;
}

FieldProfile field_profile(const LayerStack& stack, double lambda_nm, int samples_per_layer,
                           double margin_nm) {
    if (samples_per_layer < 4)
        throw invalid_input("field_profile: need at least 4 samples per layer");
    if (margin_nm < 0.0) throw invalid_input("field_profile: margin must be nonnegative");

    FieldSolution sol = solve_field(stack, lambda_nm);
    FieldProfile prof;
    prof.lambda_nm = lambda_nm;
    const std::size_t n = stack.layers.size();
    double total = stack.total_thickness_nm();

    auto push = [&](double z, double index, int id) {
        prof.z_nm.push_back(z);
        prof.amplitude.push_back(sol.amplitude_at(z));
        prof.index.push_back(index);
        prof.layer_id.push_back(id);
    };

    double density_nm = total > 0.0 && n > 0 ? total / (double(n) * samples_per_layer) : 1.0;
    if (margin_nm > 0.0) {
        int m = std::max(2, int(std::ceil(margin_nm / density_nm)));
        for (int i = 0; i < m; ++i)
            push(-margin_nm + margin_nm * i / m, stack.ambient_front.refractive_index, -1);
    }
    for (std::size_t j = 0; j < n; ++j) {
        double z0 = sol.region_start_nm[j + 1];
        double d = stack.layers[j].thickness_nm;
        for (int i = 0; i < samples_per_layer; ++i)
            push(z0 + d * i / samples_per_layer, stack.layers[j].material.refractive_index,
                 int(j));
    }
    push(total, n > 0 ? stack.layers[n - 1].material.refractive_index
                      : stack.ambient_back.refractive_index,
         n > 0 ? int(n - 1) : 0);
    if (margin_nm > 0.0) {
        int m = std::max(2, int(std::ceil(margin_nm / density_nm)));
        for (int i = 1; i <= m; ++i)
            push(total + margin_nm * i / m, stack.ambient_back.refractive_index, int(n));
    }

    double vmax = *std::max_element(prof.amplitude.begin(), prof.amplitude.end());
    if (vmax > 0.0)
        for (double& v : prof.amplitude) v /= vmax;
    return prof;
}

std::pair<double, double> mode_effective_lengths(const LayerStack& stack,
                                                 const FieldProfile& profile) {
    if (profile.z_nm.size() < 3)
        throw invalid_input("mode_effective_length: profile is too sparse");
    double total = stack.total_thickness_nm();
    if (profile.z_nm.front() > 1e-9 || profile.z_nm.back() < total - 1e-9)
        throw invalid_input("mode_effective_length: profile does not span this stack");

    // |E|^2-weighted length. The energy-density candidate integral
    // n^2|E|^2 / max(n^2|E|^2) undershoots the closed-form quarter-wave
    // expansion by ~15% on these stacks; this definition tracks it to <1%.
    double integral = 0.0, cavity_integral = 0.0, peak = 0.0;
    for (std::size_t i = 0; i + 1 < profile.z_nm.size(); ++i) {
        int id = profile.layer_id[i];
        if (id < 0 || id >= int(stack.layers.size())) continue;  // ambient margins excluded
        if (profile.z_nm[i] >= total - 1e-12) continue;          // back-margin boundary segment
        double a = profile.amplitude[i], b = profile.amplitude[i + 1];
        double piece = 0.5 * (a * a + b * b) * (profile.z_nm[i + 1] - profile.z_nm[i]);
        integral += piece;
        if (stack.cavity_index && id == int(*stack.cavity_index)) cavity_integral += piece;
        peak = std::max(peak, a * a);
    }
    if (peak <= 0.0) throw invalid_input("mode_effective_length: field vanishes inside stack");
    return {integral / peak, cavity_integral / peak};
}

double mode_effective_length(const LayerStack& stack, const FieldProfile& profile) {
    return mode_effective_lengths(stack, profile).first;
}

}  // namespace cavpol
