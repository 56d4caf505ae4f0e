#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cavpol/materials.hpp"

namespace cavpol {

struct FieldProfile;  // tmm.hpp

struct Layer {
    OpticalMaterial material;
    double thickness_nm = 0.0;
};

/// Infinitely thin oscillator sheet: N quantum wells at one antinode.
struct QWSheet {
    double z_nm = 0.0;  // position measured from the stack front surface
    int wells = 1;
    ExcitonParams exciton;
};

struct LayerStack {
    std::vector<Layer> layers;
    std::vector<QWSheet> sheets;  // sorted by z, strictly inside the stack
    OpticalMaterial ambient_front{"Air", 1.0};
    OpticalMaterial ambient_back{"Air", 1.0};
    std::optional<std::size_t> cavity_index;  // set by build_dbr_cavity

    double total_thickness_nm() const;
    double layer_start_nm(std::size_t i) const;
    /// Index of the layer containing z; front/back ambient map to the
    /// nearest end layer only for z exactly on the boundary.
    std::size_t layer_at(double z_nm) const;
};

/// Reversed copy (layers back-to-front, ambients swapped, sheets mirrored).
LayerStack reversed(const LayerStack& stack);

/// Cavity of order s (thickness s*lambda0/2n_c) between quarter-wave
/// mirrors. The mirror layer adjacent to the cavity is the low-index one
/// for a high-index cavity and vice versa, so the cavity holds the field
/// antinode structure and resonates at lambda0.
LayerStack build_dbr_cavity(const OpticalMaterial& cavity, const OpticalMaterial& mirror_hi,
                            const OpticalMaterial& mirror_lo, int order, int pairs_front,
                            int pairs_back, double lambda0_nm);

/// Smallest symmetric pair count whose resonant field satisfies
/// E_peak / E_boundary >= field_ratio.
int auto_mirror_pairs(const OpticalMaterial& cavity, const OpticalMaterial& mirror_hi,
                      const OpticalMaterial& mirror_lo, int order, double lambda0_nm,
                      double field_ratio = 100.0);

/// One sheet of N wells at every local maximum of |E(z)| inside the stack
/// whose amplitude reaches threshold * global maximum. Existing sheets are
/// replaced. Restricting z_min/z_max confines placement to a subregion
/// (default: whole stack, i.e. both mirrors and the cavity).
LayerStack place_qws_at_antinodes(const LayerStack& stack, const FieldProfile& field, int wells,
                                  const ExcitonParams& exciton, double threshold = 0.01,
                                  double z_min_nm = 0.0, double z_max_nm = -1.0);

}  // namespace cavpol
