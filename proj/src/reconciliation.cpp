#include "he3oam/reconciliation.hpp"

#include "he3oam/parallel.hpp"

#include <algorithm>

namespace he3oam {

namespace {

std::vector<PolarizationTriple> aligned_corners() { return {{1, 1, 1}, {-1, -1, -1}}; }
std::vector<PolarizationTriple> oam_reversed_corners() { return {{1, -1, 1}, {-1, 1, -1}}; }

} // namespace

const std::vector<ExtremumClaim>& stated_extremum_claims() {
    static const std::vector<ExtremumClaim> claims{
        {Channel::oam(2), false, "pP_L = pP_N = P_LP_N = 1", aligned_corners()},
        {Channel::oam(2), true, "pP_L = P_LP_N = -1", oam_reversed_corners()},
        {Channel::oam(1), false, "pP_L = pP_N = P_LP_N = 1", aligned_corners()},
        {Channel::oam(1), true, "pP_L = P_LP_N = -1", oam_reversed_corners()},
        {Channel::oam(0), true, "pP_N = 1, pP_L = -1", oam_reversed_corners()},
        {Channel::ordinary(0), false, "pP_N = 1", {{1, 0, 1}, {-1, 0, -1}}},
    };
    return claims;
}

ReconciliationReport reconcile(int grid_points) {
    const auto cube = polarization_cube(grid_points);
    ReconciliationReport report;
    report.grid_points = grid_points;

    struct Job {
        Channel channel;
        CaptureModel model;
    };
    std::vector<Job> jobs;
    for (Mode mode : {Mode::ordinary, Mode::oam})
        for (const auto& channel : channels_for(mode)) jobs.push_back({channel, CaptureModel(mode)});

    // oracle values per (job, point), kept for the extremum checks
    std::vector<std::vector<QuadRational>> oracle_values(jobs.size(),
                                                         std::vector<QuadRational>(cube.size()));
    std::vector<std::vector<char>> mismatch(jobs.size(), std::vector<char>(cube.size(), 0));
    std::vector<std::vector<QuadRational>> closed_values = oracle_values;

    parallel_for(cube.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            oracle_values[j][i] = oracle(jobs[j].channel, cube[i], jobs[j].model).value;
            closed_values[j][i] = closed_form(jobs[j].channel, cube[i], jobs[j].model).value;
            mismatch[j][i] = oracle_values[j][i] != closed_values[j][i];
        }
    });

    for (std::size_t j = 0; j < jobs.size(); ++j) {
        for (std::size_t i = 0; i < cube.size(); ++i) {
            ++report.comparisons;
            if (mismatch[j][i])
                report.discrepancies.push_back(
                    {jobs[j].channel, cube[i], closed_values[j][i], oracle_values[j][i]});
        }
    }

    for (const auto& claim : stated_extremum_claims()) {
        std::size_t j = 0;
        while (jobs[j].channel != claim.channel) ++j;
        const auto& values = oracle_values[j];
        ExtremumCheck check{claim, {}, *std::min_element(values.begin(), values.end()),
                            *std::max_element(values.begin(), values.end()), true};
        const QuadRational& target = claim.maximum ? check.grid_max : check.grid_min;
        for (std::size_t c = 0; c < claim.configurations.size(); ++c) {
            const auto value = oracle(claim.channel, claim.configurations[c], jobs[j].model).value;
            if (c == 0) check.claimed_value = value;
            if (value != target) check.holds = false;
        }
        report.extremum_checks.push_back(std::move(check));
    }
    return report;
}

nlohmann::json to_json(const ReconciliationReport& report) {
    using nlohmann::json;
    json channels = json::array();
    for (Mode mode : {Mode::ordinary, Mode::oam}) {
        for (const auto& channel : channels_for(mode)) {
            const auto n = std::count_if(report.discrepancies.begin(), report.discrepancies.end(),
                                         [&](const Discrepancy& d) { return d.channel == channel; });
            channels.push_back({{"mode", to_string(mode)},
                                {"channel", channel.label()},
                                {"closed_form_matches_oracle", n == 0},
                                {"mismatches", n}});
        }
    }
    json discrepancies = json::array();
    for (const auto& d : report.discrepancies) {
        discrepancies.push_back({{"mode", to_string(d.channel.mode())},
                                 {"channel", d.channel.label()},
                                 {"p", to_string(d.pol.p())},
                                 {"P_L", to_string(d.pol.p_l())},
                                 {"P_N", to_string(d.pol.p_n())},
                                 {"closed_form", d.closed_form.str()},
                                 {"oracle", d.oracle.str()},
                                 {"difference", (d.closed_form - d.oracle).str()},
                                 {"closed_form_decimal", to_decimal(d.closed_form)},
                                 {"oracle_decimal", to_decimal(d.oracle)}});
    }
    json extrema = json::array();
    for (const auto& c : report.extremum_checks) {
        extrema.push_back({{"mode", to_string(c.claim.channel.mode())},
                           {"channel", c.claim.channel.label()},
                           {"claim", c.claim.maximum ? "maximum" : "minimum"},
                           {"condition", c.claim.condition},
                           {"oracle_value_at_condition", c.claimed_value.str()},
                           {"grid_min", c.grid_min.str()},
                           {"grid_max", c.grid_max.str()},
                           {"holds", c.holds}});
    }
    return {{"grid_points", report.grid_points},
            {"comparisons", report.comparisons},
            {"verdict", report.agrees() ? "agree" : "disagree"},
            {"channels", channels},
            {"discrepancies", discrepancies},
            {"extremum_checks", extrema}};
}

} // namespace he3oam
