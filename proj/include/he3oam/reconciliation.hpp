#pragma once

#include "he3oam/cross_sections.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace he3oam {

/// A grid point where a closed form and the substate-sum oracle differ.
struct Discrepancy {
    Channel channel;
    PolarizationTriple pol;
    QuadRational closed_form;
    QuadRational oracle;
};

/// A statement that a channel reaches its minimum or maximum at a set of
/// corner configurations of the polarization cube.
struct ExtremumClaim {
    Channel channel;
    bool maximum = false;
    std::string condition;
    std::vector<PolarizationTriple> configurations;
};

struct ExtremumCheck {
    ExtremumClaim claim;
    QuadRational claimed_value; // oracle value at the claimed configurations
    QuadRational grid_min;
    QuadRational grid_max;
    bool holds = false;
};

struct ReconciliationReport {
    int grid_points = 0;
    std::size_t comparisons = 0;
    std::vector<Discrepancy> discrepancies;
    std::vector<ExtremumCheck> extremum_checks;

    bool agrees() const { return discrepancies.empty(); }
};

/// Extremum statements made alongside the closed forms; each is checked
/// against the oracle rather than assumed.
const std::vector<ExtremumClaim>& stated_extremum_claims();

/// Compares every closed form with its oracle on the grid_points^3 cube, in
/// both modes, with K = 1, and evaluates every stated extremum claim.
ReconciliationReport reconcile(int grid_points);

/// Deterministic machine-readable verdict.
nlohmann::json to_json(const ReconciliationReport& report);

} // namespace he3oam
