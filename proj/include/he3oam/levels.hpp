#pragma once

#include "he3oam/cross_sections.hpp"
#include "he3oam/half_int.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace he3oam {

/// One 4He state. Energies are kept as integer keV above the ground state so
/// that differences are exact.
struct LevelRecord {
    std::int64_t energy_keV = 0;
    HalfInt j;
    Parity parity = Parity::even;
    int isospin = 0;
    /// The state formed by thermal capture rather than a tabulated resonance.
    bool is_entry = false;
    std::string width_note;

    double energy_MeV() const { return static_cast<double>(energy_keV) / 1000.0; }
    /// "0+", "2-".
    std::string spin_parity() const;

    bool operator==(const LevelRecord&) const = default;
};

/// Parses the levels CSV format (comment lines start with '#').
std::vector<LevelRecord> parse_levels_csv(std::string_view text);

/// The capture entry point followed by the five tabulated levels, in the
/// order of the embedded data file.
const std::vector<LevelRecord>& builtin_levels();

/// The embedded data file verbatim.
std::string_view builtin_levels_csv();

/// The capture entry point (20.578 MeV).
const LevelRecord& capture_entry();

/// Entry energy minus the nearest level with the channel's J^pi, in MeV.
/// Throws NotFound when no level matches.
double channel_detuning(const Channel& channel);

/// Compound states reachable in a mode: 0+, 1+ for ordinary neutrons; 0-, 1-, 2- with OAM.
std::vector<Channel> parity_selection(Mode mode);

/// n + 3He -> p + 3H energy bookkeeping, in keV.
struct ReactionKinematics {
    double q_value_keV = 764.0;
    double proton_keV = 573.0;
    double triton_keV = 191.0;
};

/// m(3H) / m(p).
inline constexpr double kTritonProtonMassRatio = 2.9937;

struct KinematicsCheck {
    std::string name;
    bool passed = false;
    double observed = 0;
    double expected = 0;
    double tolerance = 0;
};

struct KinematicsReport {
    std::vector<KinematicsCheck> checks;
    bool passed() const;
};

/// Energy sum within 1 keV of the Q-value; E_p / E_t within 1% of the
/// two-body momentum-balance value m_t / m_p.
KinematicsReport check_kinematics(const ReactionKinematics& k);

} // namespace he3oam
