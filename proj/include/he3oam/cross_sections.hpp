#pragma once

#include "he3oam/half_int.hpp"
#include "he3oam/polarization.hpp"
#include "he3oam/quad_rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace he3oam {

enum class Parity { even, odd };

/// ordinary: plain spin-1/2 neutrons, compound states 0+ and 1+.
/// oam: neutrons carrying one unit of orbital angular momentum, compound
/// states 0-, 1- and 2-.
enum class Mode { ordinary, oam };

std::string_view to_string(Mode mode);
/// "ordinary" or "oam"; throws ParseError otherwise.
Mode parse_mode(std::string_view text);

/// A compound-nucleus channel J^pi.
struct Channel {
    HalfInt j_final;
    Parity parity = Parity::even;

    static Channel ordinary(int j) { return {HalfInt::integer(j), Parity::even}; }
    static Channel oam(int j) { return {HalfInt::integer(j), Parity::odd}; }

    Mode mode() const { return parity == Parity::odd ? Mode::oam : Mode::ordinary; }
    /// "0+", "2-".
    std::string label() const;

    bool operator==(const Channel&) const = default;
    auto operator<=>(const Channel&) const = default;
};

/// Channels reachable in each mode, ascending in J.
const std::vector<Channel>& channels_for(Mode mode);

/// Mode plus one nonnegative nuclear constant K per channel of that mode.
class CaptureModel {
  public:
    /// Every K set to 1 (relative cross-sections).
    explicit CaptureModel(Mode mode);
    /// k lists K in channels_for(mode) order. Throws DomainError for a
    /// negative K or a size mismatch.
    CaptureModel(Mode mode, std::vector<Rational> k);

    Mode mode() const { return mode_; }
    const std::vector<Channel>& channels() const { return channels_for(mode_); }
    const std::vector<Rational>& k_values() const { return k_; }

    /// Throws ModeMismatch for a channel that does not belong to this mode.
    const Rational& k(const Channel& channel) const;

  private:
    Mode mode_;
    std::vector<Rational> k_;
};

struct ChannelCrossSection {
    Channel channel;
    QuadRational value;
};

/// Ordinary neutrons: singlet K/4 (1 - P_N p), triplet K/4 (3 + P_N p). P_L is ignored.
ChannelCrossSection rose_closed_form(const Channel& channel, const PolarizationTriple& pol,
                                     const CaptureModel& model);

/// OAM neutrons, the three printed brackets:
///   J=2: K/24 [24 - 5(1 - p P_L) - 4(1 - p P_N) - 5(1 - P_L P_N)]
///   J=1: K/24 [3(1 - p P_L) + (6 - 4 sqrt2)(1 - p P_N) + (3 + 4 sqrt2)(1 - P_L P_N)]
///   J=0: K/12 [1 - p P_L + p P_N - P_L P_N]
ChannelCrossSection oam_closed_form(const Channel& channel, const PolarizationTriple& pol,
                                    const CaptureModel& model);

/// Brute-force substate sum for OAM neutrons. The neutron spin mu and OAM
/// m_L couple to j' in {1/2, 3/2}; j' and the 3He spin m_N couple to J.
/// Both j' paths are summed coherently before squaring, so the J=1
/// interference term is produced here, not assumed.
ChannelCrossSection oam_oracle(const Channel& channel, const PolarizationTriple& pol,
                               const CaptureModel& model);

/// Brute-force substate sum for ordinary neutrons (3He spin coupled with the neutron spin).
ChannelCrossSection rose_oracle(const Channel& channel, const PolarizationTriple& pol,
                                const CaptureModel& model);

/// Closed form matching the model mode.
ChannelCrossSection closed_form(const Channel& channel, const PolarizationTriple& pol,
                                const CaptureModel& model);
/// Oracle matching the model mode.
ChannelCrossSection oracle(const Channel& channel, const PolarizationTriple& pol,
                           const CaptureModel& model);

/// Closed-form cross-section of every channel of the model, in channel order.
std::vector<ChannelCrossSection> channel_cross_sections(const PolarizationTriple& pol,
                                                        const CaptureModel& model);

QuadRational total_cross_section(const PolarizationTriple& pol, const CaptureModel& model);

} // namespace he3oam
