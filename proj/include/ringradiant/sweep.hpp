#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringradiant/radiation.hpp"

namespace ringradiant {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

/// Declarative experiment description. File format: one key=value per line,
/// '#' comments; CLI flags override file values.
struct ExperimentConfig {
    int m = 2;
    double c = 10.0;
    std::array<double, 4> weights{1.0, 1.0, 1.0, -1.0};
    std::vector<double> radii{5.0, 10.0, 20.0, 40.0};
    double t0 = 0.0;
    int theta_nodes = 4096;        // line-source quadrature
    int phi_nodes = 64;            // sphere, Gauss-Legendre
    int sphere_theta_nodes = 128;  // sphere, trapezoid
    int time_nodes = 128;          // cycle quadrature
    PowerMode mode = PowerMode::far_field;
    OutputFormat format = OutputFormat::csv;

    void validate() const;  // throws ConfigError
    ModeWeights mode_weights() const;
    PowerOptions power_options() const;
    std::string canonical_text() const;  // fixed key order; hash input
};

void apply_key_value(ExperimentConfig& cfg, const std::string& key,
                     const std::string& value);
ExperimentConfig load_config(const std::string& path);

struct SweepRow {
    double radius = 0, t0 = 0, period = 0;
    double p_e2xb2 = 0, p_e3xb2 = 0, p_other = 0;
    double cycle_integral = 0;
    std::string error;  // empty when the row evaluated cleanly
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<DecayFit> fit;  // absent when fewer than 3 clean rows
};

/// One row per radius: term-pair fluxes at t0, cycle integral, then the
/// decay fit over the clean rows. Deterministic given the config.
SweepResult run_sweep(const ExperimentConfig& cfg);

std::string sweep_csv(const SweepResult& res);
std::string sweep_json(const SweepResult& res, const ExperimentConfig& cfg);

std::uint64_t fnv1a(const std::string& text);
std::string format_g17(double v);  // 17 significant digits

}  // namespace ringradiant
