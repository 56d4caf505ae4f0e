#include "cavpol/stack.hpp"

#include <algorithm>
#include <cmath>

#include "cavpol/errors.hpp"
#include "cavpol/tmm.hpp"

namespace cavpol {

double LayerStack::total_thickness_nm() const {
    double t = 0.0;
    for (const auto& l : layers) t += l.thickness_nm;
    return t;
}

double LayerStack::layer_start_nm(std::size_t i) const {
    double z = 0.0;
    for (std::size_t j = 0; j < i && j < layers.size(); ++j) z += layers[j].thickness_nm;
    return z;
}

std::size_t LayerStack::layer_at(double z_nm) const {
    double z = 0.0;
    for (std::size_t j = 0; j < layers.size(); ++j) {
        z += layers[j].thickness_nm;
        if (z_nm <= z) return j;
    }
    return layers.empty() ? 0 : layers.size() - 1;
}

LayerStack reversed(const LayerStack& stack) {
    LayerStack r = stack;
    std::reverse(r.layers.begin(), r.layers.end());
    std::swap(r.ambient_front, r.ambient_back);
    double total = stack.total_thickness_nm();
    r.sheets.clear();
    for (auto it = stack.sheets.rbegin(); it != stack.sheets.rend(); ++it) {
        QWSheet s = *it;
        s.z_nm = total - s.z_nm;
        r.sheets.push_back(s);
    }
    if (stack.cavity_index)
        r.cavity_index = stack.layers.size() - 1 - *stack.cavity_index;
    return r;
}

LayerStack build_dbr_cavity(const OpticalMaterial& cavity, const OpticalMaterial& mirror_hi,
                            const OpticalMaterial& mirror_lo, int order, int pairs_front,
                            int pairs_back, double lambda0_nm) {
    if (order < 1) throw invalid_input("build_dbr_cavity: cavity order must be >= 1");
    if (pairs_front < 1 || pairs_back < 1)
        throw invalid_input("build_dbr_cavity: mirror pair counts must be >= 1");
    if (lambda0_nm <= 0.0) throw invalid_input("build_dbr_cavity: lambda0 must be positive");
    if (!(mirror_hi.refractive_index > mirror_lo.refractive_index))
        throw invalid_input("build_dbr_cavity: mirror indices must be distinct, hi > lo");

    Layer hi{mirror_hi, lambda0_nm / (4.0 * mirror_hi.refractive_index)};
    Layer lo{mirror_lo, lambda0_nm / (4.0 * mirror_lo.refractive_index)};
    Layer cav{cavity, order * lambda0_nm / (2.0 * cavity.refractive_index)};

    // Adjacent layer has the lower index for a high-index cavity (edge
    // antinodes) and the higher index for a low-index cavity (edge nodes).
    bool high_index_cavity = cavity.refractive_index > mirror_lo.refractive_index;
    Layer near = high_index_cavity ? lo : hi;
    Layer far = high_index_cavity ? hi : lo;

    LayerStack stack;
    stack.layers.reserve(2 * (pairs_front + pairs_back) + 1);
    for (int p = 0; p < pairs_front; ++p) {
        stack.layers.push_back(far);
        stack.layers.push_back(near);
    }
    stack.cavity_index = stack.layers.size();
    stack.layers.push_back(cav);
    for (int p = 0; p < pairs_back; ++p) {
        stack.layers.push_back(near);
        stack.layers.push_back(far);
    }
    return stack;
}

int auto_mirror_pairs(const OpticalMaterial& cavity, const OpticalMaterial& mirror_hi,
                      const OpticalMaterial& mirror_lo, int order, double lambda0_nm,
                      double field_ratio) {
    if (field_ratio <= 1.0) throw invalid_input("auto_mirror_pairs: field ratio must exceed 1");
    double n1 = mirror_hi.refractive_index, n2 = mirror_lo.refractive_index;
    if (!(n1 > n2)) throw invalid_input("auto_mirror_pairs: mirror indices must satisfy hi > lo");

    // Intensity decay rate of the mirror Bloch mode; amplitude decays at a/2.
    double a = (8.0 / lambda0_nm) * (n1 * n2 / (n1 + n2)) * std::log(n1 / n2);
    double pair_nm = lambda0_nm / 4.0 * (1.0 / n1 + 1.0 / n2);
    int pairs = std::max(1, int(std::ceil(2.0 * std::log(field_ratio) / (a * pair_nm))));

    for (int attempt = 0; attempt < 64; ++pairs, ++attempt) {
        LayerStack stack =
            build_dbr_cavity(cavity, mirror_hi, mirror_lo, order, pairs, pairs, lambda0_nm);
        ResonanceResult res = find_resonance(stack, lambda0_nm, 5.0);
        FieldSolution sol = solve_field(stack, res.lambda_nm);
        double total = stack.total_thickness_nm();
        double boundary = std::max(sol.amplitude_at(0.0), sol.amplitude_at(total));
        double peak = 0.0;
        int samples = int(total);  // ~1 nm sampling is ample for the envelope peak
        for (int i = 0; i <= samples; ++i)
            peak = std::max(peak, sol.amplitude_at(total * i / samples));
        if (peak / boundary >= field_ratio) return pairs;
    }
    throw numerical_error("auto_mirror_pairs: field ratio not reached within 64 attempts");
}

namespace {

// Vertex of the parabola through three (possibly unevenly spaced) samples,
// clamped to the outer sample positions.
double parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
    double d1 = x1 - x0, d2 = x1 - x2;
    double n1 = y1 - y0, n2 = y1 - y2;
    double denom = d1 * n2 - d2 * n1;
    if (denom == 0.0) return x1;
    double vertex = x1 - 0.5 * (d1 * d1 * n2 - d2 * d2 * n1) / denom;
    return std::clamp(vertex, std::min(x0, x2), std::max(x0, x2));
}

}  // namespace

LayerStack place_qws_at_antinodes(const LayerStack& stack, const FieldProfile& field, int wells,
                                  const ExcitonParams& exciton, double threshold, double z_min_nm,
                                  double z_max_nm) {
    if (wells < 1) throw invalid_input("place_qws_at_antinodes: wells per antinode must be >= 1");
    if (threshold < 0.0 || threshold > 1.0)
        throw invalid_input("place_qws_at_antinodes: threshold must lie in [0, 1]");
    double total = stack.total_thickness_nm();
    if (field.z_nm.size() < 3 || field.z_nm.front() > 1e-9 || field.z_nm.back() < total - 1e-9)
        throw invalid_input("place_qws_at_antinodes: field profile does not span this stack");
    if (z_max_nm < 0.0) z_max_nm = total;

    double gmax = 0.0;
    for (std::size_t i = 0; i < field.z_nm.size(); ++i)
        if (field.z_nm[i] >= 0.0 && field.z_nm[i] <= total)
            gmax = std::max(gmax, field.amplitude[i]);
    if (gmax <= 0.0) throw invalid_input("place_qws_at_antinodes: field vanishes inside stack");

    LayerStack out = stack;
    out.sheets.clear();
    const auto& z = field.z_nm;
    const auto& A = field.amplitude;
    for (std::size_t i = 1; i + 1 < z.size(); ++i) {
        if (!(A[i] > A[i - 1] && A[i] >= A[i + 1])) continue;
        double zi = parabola_vertex(z[i - 1], A[i - 1], z[i], A[i], z[i + 1], A[i + 1]);
        if (zi <= 0.0 || zi >= total) continue;
        if (zi < z_min_nm || zi > z_max_nm) continue;
        if (A[i] < threshold * gmax * (1.0 - 1e-9)) continue;
        out.sheets.push_back(QWSheet{zi, wells, exciton});
    }
    std::sort(out.sheets.begin(), out.sheets.end(),
              [](const QWSheet& a, const QWSheet& b) { return a.z_nm < b.z_nm; });
    return out;
}

}  // namespace cavpol
