#pragma once

#include "he3oam/cross_sections.hpp"
#include "he3oam/polarization.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace he3oam {

/// One run of the experiment: polarizations, beam exposure (incident
/// neutrons, arbitrary units) and cell optical depth per unit cross-section.
struct MeasurementSetting {
    PolarizationTriple pol;
    double exposure = 1.0;
    double depth = 1.0;

    /// Throws DomainError unless exposure > 0 and depth > 0 (both finite).
    void validate() const;
};

/// Observed counts for one setting. channel_captures is either empty
/// (channel-summed detection) or holds one count per channel of the mode.
struct CountRecord {
    MeasurementSetting setting;
    std::uint64_t capture_counts = 0;
    std::uint64_t transmitted_counts = 0;
    std::vector<std::uint64_t> channel_captures;
};

/// Real-valued observation, so that noiseless expectations can be fitted
/// without rounding to integers.
struct Observation {
    MeasurementSetting setting;
    double capture = 0.0;
    std::vector<double> channel_captures;
};

/// Summed: one capture total per setting. Resolved: one capture count per
/// channel per setting, for detectors that tell decay channels apart.
enum class FitResolution { summed, resolved };

struct FitResult {
    Mode mode = Mode::oam;
    std::vector<double> k_hat;
    /// Over channels; rows and columns of components held at K = 0 are zero.
    Eigen::MatrixXd covariance;
    /// sqrt(sum_i w_i r_i^2) with w_i = 1 / max(count_i, 1).
    double residual_norm = 0.0;
    std::vector<bool> at_bound;
    int iterations = 0;

    std::vector<double> standard_errors() const;
};

/// Entry (i, c): the channel-c cross-section at setting i with K = 1,
/// rounded from the exact value.
Eigen::MatrixXd design_matrix(const std::vector<MeasurementSetting>& settings, Mode mode);

/// Expected counts for one setting under cross-sections sigma_c = row_c * K_c.
/// Transmission T = exp(-depth * sigma_total); captures split by channel in
/// proportion to sigma_c.
struct ExpectedCounts {
    double capture = 0.0;
    double transmitted = 0.0;
    std::vector<double> channel_capture;
};
ExpectedCounts expected_counts(const MeasurementSetting& setting, const Eigen::VectorXd& design_row,
                               const Eigen::VectorXd& k);

/// Poisson counting experiment. Setting i draws from its own generator seeded
/// by (seed, i), so the output is identical for a given seed and setting list
/// regardless of thread count. Always fills channel_captures.
std::vector<CountRecord> simulate_counts(const std::vector<MeasurementSetting>& settings,
                                         const CaptureModel& model, std::uint64_t seed);

/// Weighted nonnegative least squares for K under the same attenuation model
/// the simulator uses (Gauss-Newton over active-set NNLS steps). Throws
/// DegenerateDesign when the settings cannot separate the channels.
FitResult fit_observations(const std::vector<Observation>& observations, Mode mode,
                           FitResolution resolution = FitResolution::summed);

FitResult fit_K(const std::vector<CountRecord>& records, Mode mode,
                FitResolution resolution = FitResolution::summed);

/// Lawson-Hanson active-set solver for min ||A x - b|| subject to x >= 0.
/// passive receives the final set of unconstrained components.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                     std::vector<bool>* passive = nullptr);

/// Ratio of extreme singular values; infinity for a rank-deficient matrix.
double condition_number(const Eigen::MatrixXd& m);

struct SweepRow {
    PolarizationTriple pol;
    /// sigma_c / sigma_total with K = 1, exact.
    std::vector<QuadRational> fractions;
    /// Condition number of the design matrix of the flip set of pol: pol
    /// itself and the three settings obtained by reversing one polarization.
    double condition_number = 0.0;
};

/// Uniform grid_resolution^3 grid over [-1, 1]^3, sorted by condition
/// number, ties broken lexicographically on (p, P_L, P_N).
std::vector<SweepRow> discriminability_sweep(int grid_resolution, Mode mode);

/// The four settings of a flip set, in the order (pol, -p, -P_L, -P_N).
std::vector<PolarizationTriple> flip_set(const PolarizationTriple& pol);

// File formats ------------------------------------------------------------

/// Header p,P_L,P_N,exposure,depth. Polarizations are parsed exactly.
std::vector<MeasurementSetting> read_settings_csv(std::string_view text);
std::string write_settings_csv(const std::vector<MeasurementSetting>& settings);

/// Header setting_id,capture,transmitted, optionally followed by one
/// capture_j<J> column per channel of the mode. setting_id indexes settings.
std::vector<CountRecord> read_counts_csv(std::string_view text,
                                         const std::vector<MeasurementSetting>& settings, Mode mode);
std::string write_counts_csv(const std::vector<CountRecord>& records, Mode mode,
                             bool channel_columns);

/// {K_hat, covariance, residual_norm} plus channel order and standard errors.
nlohmann::json to_json(const FitResult& fit);

} // namespace he3oam
