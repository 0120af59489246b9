#include "he3oam/levels.hpp"

#include "he3oam/csv.hpp"
#include "he3oam/errors.hpp"
#include "he4_levels_data.hpp"

#include <cmath>
#include <limits>

namespace he3oam {

std::string LevelRecord::spin_parity() const {
    return j.str() + (parity == Parity::odd ? "-" : "+");
}

std::vector<LevelRecord> parse_levels_csv(std::string_view text) {
    const auto lines = csv::data_lines(text);
    const std::vector<std::string> header{"energy_keV", "J", "parity", "T", "kind", "width_note"};
    if (lines.empty() || csv::split(lines.front()) != header)
        throw ParseError("levels table must start with header energy_keV,J,parity,T,kind,width_note");

    std::vector<LevelRecord> levels;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = csv::split(lines[i]);
        const std::string where = "levels row " + std::to_string(i);
        if (f.size() != header.size()) throw ParseError(where + ": expected 6 fields");
        LevelRecord rec;
        try {
            rec.energy_keV = std::stoll(f[0]);
            rec.isospin = std::stoi(f[3]);
        } catch (const std::logic_error&) {
            throw ParseError(where + ": bad integer field");
        }
        rec.j = HalfInt::parse(f[1]);
        if (f[2] != "+" && f[2] != "-") throw ParseError(where + ": parity must be + or -");
        rec.parity = f[2] == "-" ? Parity::odd : Parity::even;
        if (f[4] != "entry" && f[4] != "level") throw ParseError(where + ": kind must be entry or level");
        rec.is_entry = f[4] == "entry";
        rec.width_note = f[5];
        if (rec.energy_keV <= 0) throw ParseError(where + ": excitation energy must be positive");
        levels.push_back(std::move(rec));
    }
    return levels;
}

std::string_view builtin_levels_csv() { return detail::kHe4LevelsCsv; }

const std::vector<LevelRecord>& builtin_levels() {
    static const std::vector<LevelRecord> levels = parse_levels_csv(builtin_levels_csv());
    return levels;
}

const LevelRecord& capture_entry() {
    for (const auto& level : builtin_levels())
        if (level.is_entry) return level;
    throw NotFound("level table has no capture entry");
}

double channel_detuning(const Channel& channel) {
    const auto& entry = capture_entry();
    const LevelRecord* nearest = nullptr;
    auto best = std::numeric_limits<std::int64_t>::max();
    for (const auto& level : builtin_levels()) {
        if (level.is_entry || level.j != channel.j_final || level.parity != channel.parity) continue;
        const auto distance = std::abs(entry.energy_keV - level.energy_keV);
        if (distance < best) {
            best = distance;
            nearest = &level;
        }
    }
    if (!nearest) throw NotFound("no tabulated level with J^pi = " + channel.label());
    return static_cast<double>(entry.energy_keV - nearest->energy_keV) / 1000.0;
}

std::vector<Channel> parity_selection(Mode mode) { return channels_for(mode); }

bool KinematicsReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return !checks.empty();
}

KinematicsReport check_kinematics(const ReactionKinematics& k) {
    KinematicsReport report;

    const double sum = k.proton_keV + k.triton_keV;
    report.checks.push_back({"energy_sum", std::abs(sum - k.q_value_keV) <= 1.0, sum, k.q_value_keV, 1.0});

    // Equal and opposite momenta: E_p / E_t = m_t / m_p.
    KinematicsCheck balance{"momentum_balance", false, 0.0, kTritonProtonMassRatio, 0.01};
    if (k.proton_keV > 0 && k.triton_keV > 0) {
        balance.observed = k.proton_keV / k.triton_keV;
        balance.passed = std::abs(balance.observed / kTritonProtonMassRatio - 1.0) <= balance.tolerance;
    }
    report.checks.push_back(balance);
    return report;
}

} // namespace he3oam
