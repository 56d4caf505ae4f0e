#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cavpol/materials.hpp"
#include "cavpol/stack.hpp"

namespace cavpol::cli {

/// Parsed config file plus its raw bytes and FNV-1a hash (reproducibility
/// stamp carried into summary outputs).
struct LoadedConfig {
    nlohmann::json json;
    std::string raw;
    std::string hash_hex;
    std::string path;
};

LoadedConfig load_config(const std::string& path);

/// Schema building blocks reused by tests.
ExcitonParams parse_exciton(const nlohmann::json& spec);
LayerStack parse_stack(const nlohmann::json& spec);

/// Command runners. Validation errors throw invalid_input (exit code 2),
/// numerical failures throw numerical_error (exit code 3). With dry_run the
/// resolved parameter set is printed to `log` and nothing is computed.
void run_spectrum(const LoadedConfig& cfg, bool dry_run, std::ostream& log);
void run_coupling_sweep(const LoadedConfig& cfg, bool dry_run, std::ostream& log);
void run_polariton(const LoadedConfig& cfg, bool dry_run, std::ostream& log);
void run_td_sweep(const LoadedConfig& cfg, bool dry_run, std::ostream& log);
void run_phase_diagram(const LoadedConfig& cfg, bool dry_run, std::ostream& log);

}  // namespace cavpol::cli
