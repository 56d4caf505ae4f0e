#include "cavpol/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "cavpol/constants.hpp"
#include "cavpol/coupling.hpp"
#include "cavpol/csv.hpp"
#include "cavpol/errors.hpp"
#include "cavpol/numerics.hpp"
#include "cavpol/phasediagram.hpp"
#include "cavpol/tmm.hpp"

namespace cavpol::cli {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw invalid_input(ctx + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known) throw invalid_input(ctx + ": unknown key '" + it.key() + "'");
    }
}

const json& require(const json& obj, const std::string& ctx, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw invalid_input(ctx + ": missing required key '" + key + "'");
    return *it;
}

double require_number(const json& obj, const std::string& ctx, const char* key) {
    const json& v = require(obj, ctx, key);
    if (!v.is_number()) throw invalid_input(ctx + ": key '" + key + "' must be a number");
    return v.get<double>();
}

int require_int(const json& obj, const std::string& ctx, const char* key) {
    const json& v = require(obj, ctx, key);
    if (!v.is_number_integer()) throw invalid_input(ctx + ": key '" + key + "' must be an integer");
    return v.get<int>();
}

std::string require_string(const json& obj, const std::string& ctx, const char* key) {
    const json& v = require(obj, ctx, key);
    if (!v.is_string()) throw invalid_input(ctx + ": key '" + key + "' must be a string");
    return v.get<std::string>();
}

double number_or(const json& obj, const char* key, double fallback) {
    auto it = obj.find(key);
    return it == obj.end() ? fallback : it->get<double>();
}

int int_or(const json& obj, const char* key, int fallback) {
    auto it = obj.find(key);
    return it == obj.end() ? fallback : it->get<int>();
}

std::optional<double> opt_number(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    return it->get<double>();
}

void check_schema_version(const json& obj, const std::string& ctx) {
    int v = require_int(obj, ctx, "schema_version");
    if (v != 1) throw invalid_input(ctx + ": unsupported schema_version " + std::to_string(v));
}

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw invalid_input("cannot open output file '" + path + "'");
    return os;
}

BroadeningParams parse_broadening(const json& cfg, const std::string& ctx) {
    BroadeningParams p;
    auto it = cfg.find("broadening");
    if (it == cfg.end()) return p;
    check_keys(*it, ctx + ".broadening",
               {"gamma_a_mev_per_k", "gamma_lo_mev", "lo_phonon_mev", "gamma_ex_mev",
                "gamma_inh_mev"});
    p.gamma_a_mev_per_k = number_or(*it, "gamma_a_mev_per_k", p.gamma_a_mev_per_k);
    p.gamma_lo_mev = number_or(*it, "gamma_lo_mev", p.gamma_lo_mev);
    p.lo_phonon_mev = number_or(*it, "lo_phonon_mev", p.lo_phonon_mev);
    p.gamma_ex_mev = number_or(*it, "gamma_ex_mev", p.gamma_ex_mev);
    p.gamma_inh_mev = number_or(*it, "gamma_inh_mev", p.gamma_inh_mev);
    return p;
}

json resolved_exciton(const ExcitonParams& e) {
    return json{{"f2d_per_m2", e.f2d_per_m2},       {"binding_mev", e.binding_mev},
                {"bohr_radius_nm", e.bohr_radius_nm}, {"reduced_mass", e.reduced_mass},
                {"total_mass", e.total_mass},         {"eps_r", e.eps_r},
                {"bandgap_mev", e.bandgap_mev}};
}

}  // namespace

LoadedConfig load_config(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw invalid_input("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << is.rdbuf();
    LoadedConfig cfg;
    cfg.raw = buf.str();
    cfg.path = path;
    try {
        cfg.json = json::parse(cfg.raw, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw invalid_input(std::string("config parse error: ") + e.what());
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(num::fnv1a(cfg.raw)));
    cfg.hash_hex = hex;
    return cfg;
}

ExcitonParams parse_exciton(const json& spec) {
    const std::string ctx = "exciton";
    check_keys(spec, ctx,
               {"name", "f2d_per_m2", "binding_mev", "bohr_radius_nm", "reduced_mass",
                "total_mass", "eps_r", "bandgap_mev"});
    ExcitonInputs in;
    in.binding_mev = opt_number(spec, "binding_mev");
    in.bohr_radius_nm = opt_number(spec, "bohr_radius_nm");
    in.reduced_mass = opt_number(spec, "reduced_mass");

    if (spec.contains("name")) {
        ExcitonParams base = builtin_exciton(spec["name"].get<std::string>());
        in.f2d_per_m2 = number_or(spec, "f2d_per_m2", base.f2d_per_m2);
        in.total_mass = number_or(spec, "total_mass", base.total_mass);
        in.eps_r = number_or(spec, "eps_r", base.eps_r);
        in.bandgap_mev = number_or(spec, "bandgap_mev", base.bandgap_mev);
        // Overriding part of the consistency triple re-derives the rest:
        // a0 or mu overrides keep the builtin binding energy; overriding
        // E_B keeps the builtin Bohr radius.
        int given = int(in.binding_mev.has_value()) + int(in.bohr_radius_nm.has_value()) +
                    int(in.reduced_mass.has_value());
        if (given == 0) {
            in.binding_mev = base.binding_mev;
            in.bohr_radius_nm = base.bohr_radius_nm;
        } else if (given == 1) {
            if (!in.binding_mev)
                in.binding_mev = base.binding_mev;
            else
                in.bohr_radius_nm = base.bohr_radius_nm;
        }
    } else {
        in.f2d_per_m2 = require_number(spec, ctx, "f2d_per_m2");
        in.total_mass = number_or(spec, "total_mass", in.total_mass);
        in.eps_r = number_or(spec, "eps_r", in.eps_r);
        in.bandgap_mev = number_or(spec, "bandgap_mev", in.bandgap_mev);
    }
    return make_exciton(in);
}

LayerStack parse_stack(const json& spec) {
    const std::string ctx = "stack";
    check_keys(spec, ctx, {"ambient_front", "ambient_back", "layers", "dbr_cavity"});
    LayerStack stack;
    if (spec.contains("ambient_front"))
        stack.ambient_front = builtin_material(spec["ambient_front"].get<std::string>());
    if (spec.contains("ambient_back"))
        stack.ambient_back = builtin_material(spec["ambient_back"].get<std::string>());

    bool has_layers = spec.contains("layers");
    bool has_dbr = spec.contains("dbr_cavity");
    if (has_layers == has_dbr)
        throw invalid_input(ctx + ": provide exactly one of 'layers' or 'dbr_cavity'");

    if (has_layers) {
        for (const auto& l : spec["layers"]) {
            check_keys(l, ctx + ".layers[]", {"material", "thickness_nm"});
            Layer layer;
            layer.material = builtin_material(require_string(l, ctx, "material"));
            layer.thickness_nm = require_number(l, ctx, "thickness_nm");
            if (layer.thickness_nm <= 0.0)
                throw invalid_input(ctx + ": layer thickness must be positive");
            stack.layers.push_back(layer);
        }
        return stack;
    }

    const json& d = spec["dbr_cavity"];
    const std::string dctx = ctx + ".dbr_cavity";
    check_keys(d, dctx,
               {"cavity_material", "mirror_hi", "mirror_lo", "order", "pairs",
                "auto_pairs_field_ratio", "lambda0_nm"});
    OpticalMaterial cavity = builtin_material(require_string(d, dctx, "cavity_material"));
    OpticalMaterial hi = builtin_material(require_string(d, dctx, "mirror_hi"));
    OpticalMaterial lo = builtin_material(require_string(d, dctx, "mirror_lo"));
    int order = require_int(d, dctx, "order");
    double lambda0 = require_number(d, dctx, "lambda0_nm");
    int pairs;
    if (d.contains("pairs") == d.contains("auto_pairs_field_ratio"))
        throw invalid_input(dctx + ": provide exactly one of 'pairs' or 'auto_pairs_field_ratio'");
    if (d.contains("pairs"))
        pairs = require_int(d, dctx, "pairs");
    else
        pairs = auto_mirror_pairs(cavity, hi, lo, order, lambda0,
                                  require_number(d, dctx, "auto_pairs_field_ratio"));
    LayerStack built = build_dbr_cavity(cavity, hi, lo, order, pairs, pairs, lambda0);
    built.ambient_front = stack.ambient_front;
    built.ambient_back = stack.ambient_back;
    return built;
}

void run_spectrum(const LoadedConfig& cfg, bool dry_run, std::ostream& log) {
    const std::string ctx = "spectrum";
    const json& c = cfg.json;
    check_keys(c, ctx,
               {"schema_version", "stack", "lambda_min_nm", "lambda_max_nm", "points",
                "output_csv"});
    check_schema_version(c, ctx);
    LayerStack stack = parse_stack(require(c, ctx, "stack"));
    double lmin = require_number(c, ctx, "lambda_min_nm");
    double lmax = require_number(c, ctx, "lambda_max_nm");
    int points = require_int(c, ctx, "points");
    std::string out_path = require_string(c, ctx, "output_csv");
    if (lmin <= 0.0 || lmax < lmin) throw invalid_input(ctx + ": bad wavelength range");
    if (points < 2) throw invalid_input(ctx + ": points must be >= 2");

    if (dry_run) {
        json resolved{{"command", "spectrum"},
                      {"config_hash", cfg.hash_hex},
                      {"layers", stack.layers.size()},
                      {"total_thickness_nm", stack.total_thickness_nm()},
                      {"lambda_min_nm", lmin},
                      {"lambda_max_nm", lmax},
                      {"points", points},
                      {"output_csv", out_path}};
        log << resolved.dump(2) << '\n';
        return;
    }
    auto rows = spectrum(stack, lmin, lmax, points);
    auto os = open_output(out_path);
    csv::write_spectrum(os, rows);
}

namespace {

struct SweepStructure {
    OpticalMaterial cavity, hi, lo;
    CavityKind kind;
};

// x interpolates the variable mirror layer from the maximum-contrast
// partner toward the cavity material, for either cavity kind.
SweepStructure sweep_structure(CavityKind kind, double x) {
    SweepStructure s;
    s.kind = kind;
    char name[32];
    if (kind == CavityKind::HighIndex) {
        std::snprintf(name, sizeof(name), "AlGaAs(%g)", x);
        s.cavity = builtin_material("GaAs");
        s.hi = builtin_material("GaAs");
        s.lo = builtin_material(name);
    } else {
        std::snprintf(name, sizeof(name), "AlGaAs(%g)", 1.0 - x);
        s.cavity = builtin_material("AlAs");
        s.hi = builtin_material(name);
        s.lo = builtin_material("AlAs");
    }
    return s;
}

}  // namespace

void run_coupling_sweep(const LoadedConfig& cfg, bool dry_run, std::ostream& log) {
    const std::string ctx = "coupling-sweep";
    const json& c = cfg.json;
    check_keys(c, ctx,
               {"schema_version", "lambda0_nm", "cavity_kinds", "x_values", "orders",
                "wells_per_antinode", "exciton", "field_ratio", "antinode_threshold",
                "output_csv"});
    check_schema_version(c, ctx);
    double lambda0 = require_number(c, ctx, "lambda0_nm");
    int wells = require_int(c, ctx, "wells_per_antinode");
    double field_ratio = number_or(c, "field_ratio", 100.0);
    double threshold = number_or(c, "antinode_threshold", 0.01);
    ExcitonParams exciton = parse_exciton(require(c, ctx, "exciton"));
    std::string out_path = require_string(c, ctx, "output_csv");

    std::vector<CavityKind> kinds;
    for (const auto& k : require(c, ctx, "cavity_kinds")) {
        std::string s = k.get<std::string>();
        if (s == "high")
            kinds.push_back(CavityKind::HighIndex);
        else if (s == "low")
            kinds.push_back(CavityKind::LowIndex);
        else
            throw invalid_input(ctx + ": cavity kind must be 'high' or 'low', got '" + s + "'");
    }
    std::vector<double> xs = require(c, ctx, "x_values").get<std::vector<double>>();
    std::vector<int> orders = require(c, ctx, "orders").get<std::vector<int>>();

    if (dry_run) {
        json resolved{{"command", "coupling-sweep"}, {"config_hash", cfg.hash_hex},
                      {"lambda0_nm", lambda0},       {"x_values", xs},
                      {"orders", orders},            {"wells_per_antinode", wells},
                      {"field_ratio", field_ratio},  {"antinode_threshold", threshold},
                      {"exciton", resolved_exciton(exciton)},
                      {"output_csv", out_path}};
        log << resolved.dump(2) << '\n';
        return;
    }

    std::vector<csv::CouplingSweepRow> rows;
    for (CavityKind kind : kinds) {
        for (double x : xs) {
            SweepStructure s = sweep_structure(kind, x);
            for (int order : orders) {
                int pairs = auto_mirror_pairs(s.cavity, s.hi, s.lo, order, lambda0, field_ratio);
                LayerStack stack =
                    build_dbr_cavity(s.cavity, s.hi, s.lo, order, pairs, pairs, lambda0);
                ResonanceResult res = find_resonance(stack, lambda0, 5.0);
                FieldProfile prof = field_profile(stack, res.lambda_nm);
                LayerStack loaded = place_qws_at_antinodes(stack, prof, wells, exciton, threshold);
                CouplingResult numeric = numeric_g(loaded, prof);
                CouplingResult analytic =
                    analytic_g(s.hi.refractive_index, s.lo.refractive_index, kind, order, wells,
                               exciton.f2d_per_m2, lambda0);
                rows.push_back({x, order, numeric.l_int_nm, numeric.l_ext_nm, numeric.l_eff_nm,
                                numeric.g_total_mev, analytic.g_total_mev, numeric.n_eff});
            }
        }
    }
    auto os = open_output(out_path);
    csv::write_coupling_sweep(os, rows);
}

void run_polariton(const LoadedConfig& cfg, bool dry_run, std::ostream& log) {
    const std::string ctx = "polariton";
    const json& c = cfg.json;
    check_keys(c, ctx,
               {"schema_version", "exciton", "gamma_min", "gamma_max", "gamma_points",
                "delta_min_mev", "delta_max_mev", "delta_points", "branch_gamma_min",
                "branch_gamma_max", "branch_points", "hopfield_csv", "branch_csv"});
    check_schema_version(c, ctx);
    ExcitonParams exciton = parse_exciton(require(c, ctx, "exciton"));
    double gmin = require_number(c, ctx, "gamma_min");
    double gmax = require_number(c, ctx, "gamma_max");
    int gpts = require_int(c, ctx, "gamma_points");
    double dmin = require_number(c, ctx, "delta_min_mev");
    double dmax = require_number(c, ctx, "delta_max_mev");
    int dpts = require_int(c, ctx, "delta_points");
    double bgmin = number_or(c, "branch_gamma_min", 0.01);
    double bgmax = number_or(c, "branch_gamma_max", gmax);
    int bpts = int_or(c, "branch_points", 100);
    std::string hopfield_path = require_string(c, ctx, "hopfield_csv");
    std::string branch_path = require_string(c, ctx, "branch_csv");

    if (dry_run) {
        json resolved{{"command", "polariton"},
                      {"config_hash", cfg.hash_hex},
                      {"gamma_grid", {gmin, gmax, gpts}},
                      {"delta_grid_mev", {dmin, dmax, dpts}},
                      {"branch_gamma_grid", {bgmin, bgmax, bpts}},
                      {"exciton", resolved_exciton(exciton)},
                      {"hopfield_csv", hopfield_path},
                      {"branch_csv", branch_path}};
        log << resolved.dump(2) << '\n';
        return;
    }

    auto map = hopfield_map(gmin, gmax, gpts, dmin, dmax, dpts, exciton);
    {
        auto os = open_output(hopfield_path);
        csv::write_hopfield(os, map);
    }

    // Delta = 0 branch energies against the standard coupled-oscillator
    // values -E_B -+ g (the linear Rabi splitting).
    std::vector<csv::BranchEnergyRow> branches;
    DetuningSpec det{0.0, 0.0, 1.0};
    for (int i = 0; i < bpts; ++i) {
        double gamma = bpts == 1 ? bgmin : bgmin + (bgmax - bgmin) * i / (bpts - 1);
        PolaritonSolution lp = solve_variational(gamma, det, 0.0, exciton);
        PolaritonSolution up = upper_polariton(gamma, det, 0.0, exciton);
        double eb = exciton.binding_mev;
        branches.push_back({gamma, gamma * eb, lp.energy_over_eb * eb, up.energy_over_eb * eb,
                            -eb - gamma * eb, -eb + gamma * eb});
    }
    auto os = open_output(branch_path);
    csv::write_branch_energies(os, branches);
}

void run_td_sweep(const LoadedConfig& cfg, bool dry_run, std::ostream& log) {
    const std::string ctx = "td-sweep";
    const json& c = cfg.json;
    check_keys(c, ctx,
               {"schema_version", "exciton", "g_min_mev", "g_max_mev", "g_points", "delta_mev",
                "lambda0_nm", "quality", "threshold", "broadening", "output_csv"});
    check_schema_version(c, ctx);
    ExcitonParams exciton = parse_exciton(require(c, ctx, "exciton"));
    double g_min = require_number(c, ctx, "g_min_mev");
    double g_max = require_number(c, ctx, "g_max_mev");
    int points = require_int(c, ctx, "g_points");
    if (g_min <= 0.0 || g_max < g_min || points < 1)
        throw invalid_input(ctx + ": need 0 < g_min_mev <= g_max_mev and g_points >= 1");
    double delta = number_or(c, "delta_mev", 0.0);
    double lambda0 = number_or(c, "lambda0_nm", 850.0);
    double threshold = number_or(c, "threshold", 0.01);
    BroadeningParams broadening = parse_broadening(c, ctx);
    broadening.quality = number_or(c, "quality", broadening.quality);
    std::string out_path = require_string(c, ctx, "output_csv");

    if (dry_run) {
        json resolved{{"command", "td-sweep"},     {"config_hash", cfg.hash_hex},
                      {"g_grid_mev", {g_min, g_max, points}}, {"delta_mev", delta},
                      {"lambda0_nm", lambda0},     {"quality", broadening.quality},
                      {"threshold", threshold},    {"exciton", resolved_exciton(exciton)},
                      {"output_csv", out_path}};
        log << resolved.dump(2) << '\n';
        return;
    }

    DetuningSpec det{delta, constants::photon_energy_mev(lambda0), 1.0};
    std::vector<csv::TdSweepRow> rows(points);
    int n = points;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        double g = points == 1 ? g_min : g_min + (g_max - g_min) * i / (points - 1);
        double gamma = g / exciton.binding_mev;
        csv::TdSweepRow row;
        row.g_mev = g;
        try {
            row.t_d_k = dissociation_temperature(gamma, det, exciton, broadening, threshold);
            // ratio evaluated at T_d, the same convention as the sweep plot
            row.depth_to_halfwidth_ratio =
                lp_depth_to_halfwidth_ratio(gamma, det, exciton, broadening, row.t_d_k);
        } catch (const numerical_error&) {
            row.t_d_k = std::nan("");
            row.depth_to_halfwidth_ratio = std::nan("");
        }
        rows[i] = row;
    }
    auto os = open_output(out_path);
    csv::write_td_sweep(os, rows);
}

namespace {

struct BuiltStructure {
    StructureSpec spec;
    double g_analytic_mev = 0.0;
    double g_numeric_mev = 0.0;
};

BuiltStructure parse_structure(const json& s, double threshold) {
    const std::string ctx = "phase-diagram.structures[]";
    check_keys(s, ctx,
               {"name", "kind", "cavity_material", "mirror_hi", "mirror_lo", "order",
                "lambda0_nm", "field_ratio", "coupling_path", "g_mev", "exciton",
                "wells_per_antinode", "total_qw_count", "antinode_threshold", "delta_mev",
                "quality", "spot_radius_um", "spin_degeneracy", "broadening"});
    BuiltStructure built;
    StructureSpec& spec = built.spec;
    spec.name = require_string(s, ctx, "name");
    spec.exciton = parse_exciton(require(s, ctx, "exciton"));
    spec.n_per_antinode = require_int(s, ctx, "wells_per_antinode");
    if (spec.n_per_antinode < 1) throw invalid_input(ctx + ": wells_per_antinode must be >= 1");
    spec.spot_radius_um = number_or(s, "spot_radius_um", 50.0);
    if (spec.spot_radius_um <= 0.0) throw invalid_input(ctx + ": spot_radius_um must be positive");
    spec.spin_degeneracy = number_or(s, "spin_degeneracy", 2.0);
    spec.broadening = parse_broadening(s, ctx);
    spec.broadening.quality = number_or(s, "quality", spec.broadening.quality);
    double lambda0 = require_number(s, ctx, "lambda0_nm");
    double delta = number_or(s, "delta_mev", 0.0);

    std::string kind = require_string(s, ctx, "kind");
    double n_eff = 0.0;
    if (kind == "dbr") {
        OpticalMaterial cavity = builtin_material(require_string(s, ctx, "cavity_material"));
        OpticalMaterial hi = builtin_material(require_string(s, ctx, "mirror_hi"));
        OpticalMaterial lo = builtin_material(require_string(s, ctx, "mirror_lo"));
        int order = require_int(s, ctx, "order");
        double field_ratio = number_or(s, "field_ratio", 100.0);
        double antinode_threshold = number_or(s, "antinode_threshold", 0.01);

        int pairs = auto_mirror_pairs(cavity, hi, lo, order, lambda0, field_ratio);
        LayerStack stack = build_dbr_cavity(cavity, hi, lo, order, pairs, pairs, lambda0);
        ResonanceResult res = find_resonance(stack, lambda0, 5.0);
        FieldProfile prof = field_profile(stack, res.lambda_nm);
        LayerStack loaded = place_qws_at_antinodes(stack, prof, spec.n_per_antinode,
                                                   spec.exciton, antinode_threshold);
        CouplingResult numeric = numeric_g(loaded, prof);
        CavityKind ck = cavity.refractive_index > lo.refractive_index ? CavityKind::HighIndex
                                                                      : CavityKind::LowIndex;
        CouplingResult analytic = analytic_g(hi.refractive_index, lo.refractive_index, ck, order,
                                             spec.n_per_antinode, spec.exciton.f2d_per_m2,
                                             lambda0);
        built.g_numeric_mev = numeric.g_total_mev;
        built.g_analytic_mev = analytic.g_total_mev;
        std::string path = s.contains("coupling_path")
                               ? s["coupling_path"].get<std::string>()
                               : "numeric";
        if (path == "numeric") {
            spec.g_mev = numeric.g_total_mev;
            n_eff = numeric.n_eff;
        } else if (path == "analytic") {
            spec.g_mev = analytic.g_total_mev;
            n_eff = analytic.n_eff;
        } else {
            throw invalid_input(ctx + ": coupling_path must be 'numeric' or 'analytic'");
        }
        spec.total_qw_count =
            int_or(s, "total_qw_count", int(loaded.sheets.size()) * spec.n_per_antinode);
    } else if (kind == "fixed_g") {
        spec.g_mev = require_number(s, ctx, "g_mev");
        built.g_numeric_mev = built.g_analytic_mev = spec.g_mev;
        n_eff = effective_index_from_g(spec.g_mev, spec.n_per_antinode, spec.exciton.f2d_per_m2,
                                       lambda0);
        spec.total_qw_count = require_int(s, ctx, "total_qw_count");
    } else {
        throw invalid_input(ctx + ": kind must be 'dbr' or 'fixed_g'");
    }

    spec.detuning.delta_mev = delta;
    spec.detuning.photon_energy_mev = constants::photon_energy_mev(lambda0);
    spec.detuning.k_z_per_nm = 2.0 * std::numbers::pi * n_eff / lambda0;
    (void)threshold;
    return built;
}

}  // namespace

void run_phase_diagram(const LoadedConfig& cfg, bool dry_run, std::ostream& log) {
    const std::string ctx = "phase-diagram";
    const json& c = cfg.json;
    check_keys(c, ctx,
               {"schema_version", "temperature_min_k", "temperature_max_k",
                "temperature_points", "threshold", "output_prefix", "structures"});
    check_schema_version(c, ctx);
    double t_min = require_number(c, ctx, "temperature_min_k");
    double t_max = require_number(c, ctx, "temperature_max_k");
    int t_points = require_int(c, ctx, "temperature_points");
    double threshold = number_or(c, "threshold", 0.01);
    std::string prefix = require_string(c, ctx, "output_prefix");
    const json& structures = require(c, ctx, "structures");
    if (!structures.is_array() || structures.empty())
        throw invalid_input(ctx + ": 'structures' must be a non-empty array");
    if (t_min <= 0.0 || t_max <= t_min || t_points < 2)
        throw invalid_input(ctx + ": bad temperature grid");

    std::vector<BuiltStructure> built;
    for (const auto& s : structures) built.push_back(parse_structure(s, threshold));

    if (dry_run) {
        json list = json::array();
        for (const auto& b : built)
            list.push_back(json{{"name", b.spec.name},
                                {"g_mev", b.spec.g_mev},
                                {"g_numeric_mev", b.g_numeric_mev},
                                {"g_analytic_mev", b.g_analytic_mev},
                                {"total_qw_count", b.spec.total_qw_count},
                                {"k_z_per_nm", b.spec.detuning.k_z_per_nm},
                                {"exciton", resolved_exciton(b.spec.exciton)}});
        json resolved{{"command", "phase-diagram"},
                      {"config_hash", cfg.hash_hex},
                      {"temperature_grid_k", {t_min, t_max, t_points}},
                      {"threshold", threshold},
                      {"output_prefix", prefix},
                      {"structures", list}};
        log << resolved.dump(2) << '\n';
        return;
    }

    std::vector<double> grid(t_points);
    for (int i = 0; i < t_points; ++i)
        grid[i] = t_min + (t_max - t_min) * i / (t_points - 1);

    std::vector<csv::PhaseSummaryRow> summary;
    for (const auto& b : built) {
        PhaseDiagram diagram = build_phase_diagram(b.spec, grid, threshold);
        auto os = open_output(prefix + "_" + b.spec.name + ".csv");
        csv::write_phase_curve(os, diagram);
        summary.push_back({b.spec.name, b.spec.g_mev, diagram.t_d_k, diagram.n_s_per_qw_cm2,
                           diagram.n_s_total_cm2});
    }
    auto os = open_output(prefix + "_summary.csv");
    csv::write_phase_summary(os, summary, cfg.hash_hex);
}

}  // namespace cavpol::cli
