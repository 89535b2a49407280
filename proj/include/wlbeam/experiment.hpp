#pragma once

// Experiment harness: configs, figure presets, theory / Monte Carlo runners,
// and CSV / plot-script emission.

#include <optional>
#include <string>
#include <vector>

#include "wlbeam/analysis.hpp"
#include "wlbeam/beamform.hpp"
#include "wlbeam/theory.hpp"

namespace wlbeam {

enum class SweepVariable { GammaRate, GammaPhase, SoiDoa, IqPair };

struct Sweep {
    SweepVariable variable = SweepVariable::GammaRate;
    std::vector<double> values;            // grid for scalar sweeps
    std::vector<IqImbalance> iq_values;    // grid for IqPair sweeps
    std::size_t size() const {
        return variable == SweepVariable::IqPair ? iq_values.size() : values.size();
    }
};

struct ExperimentConfig {
    ArrayScenario scenario;
    Sweep sweep;
    std::size_t trials = 1;
    std::size_t snapshots = 20000;
    std::uint64_t seed = 1;
    bool snap_doas = true;
    std::optional<IqImbalance> iq;
    std::string output;
    // Diagnostic variant: also build weights from full-observation statistics
    // and report their deviation from the IN-statistics weights.
    bool use_data_stats = false;

    void validate() const;
};

enum class RowSource { TheoryExact, TheoryApprox, Simulated };

struct ResultRow {
    double sweep_value = 0.0;
    RowSource source = RowSource::TheoryExact;
    double g_db = 0.0;
    std::optional<double> g_i_db;
    std::optional<double> g_q_db;
    std::optional<double> lambda_i;
    std::optional<double> lambda_q;
    double sinr_mvdr_db = 0.0;
    double sinr_capon_db = 0.0;
    std::size_t trials_used = 0;
    std::size_t snapshots_used = 0;
};

const char* row_source_name(RowSource s);

// Scenario at one sweep grid point (snapping applied when configured).
ArrayScenario scenario_at(const ExperimentConfig& cfg, std::size_t grid_index);

std::vector<ResultRow> run_theory(const ExperimentConfig& cfg);
std::vector<ResultRow> run_simulation(const ExperimentConfig& cfg);

ExperimentConfig figure_preset(const std::string& name);
std::vector<std::string> preset_names();

enum class EmitFormat { Csv, PlotScript };

void emit(std::vector<ResultRow> rows, const std::string& path, EmitFormat format);
std::string to_csv(std::vector<ResultRow> rows);

struct CompareReport {
    std::size_t points_compared = 0;
    double max_g_db = 0.0;
    double max_g_i_db = 0.0;
    double max_g_q_db = 0.0;
    double max_sinr_mvdr_db = 0.0;
    double max_sinr_capon_db = 0.0;
};

// Max |simulated - theory-exact| per dB column over matching sweep values.
CompareReport compare_rows(const std::vector<ResultRow>& theory_rows,
                           const std::vector<ResultRow>& sim_rows);

// Structured key-value config text.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string dump_config(const ExperimentConfig& cfg);

double to_db(double linear);

}  // namespace wlbeam
