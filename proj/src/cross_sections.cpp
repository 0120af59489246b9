#include "he3oam/cross_sections.hpp"

#include "he3oam/clebsch_gordan.hpp"
#include "he3oam/errors.hpp"

namespace he3oam {

namespace {

const HalfInt kHalf = HalfInt::half(1);
const HalfInt kOne = HalfInt::integer(1);

std::size_t channel_index(Mode mode, const Channel& channel) {
    const auto& list = channels_for(mode);
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == channel) return i;
    throw ModeMismatch("channel " + channel.label() + " does not exist in " +
                       std::string(to_string(mode)) + " mode");
}

void require_mode(const CaptureModel& model, Mode expected, const Channel& channel) {
    if (model.mode() != expected)
        throw ModeMismatch("channel " + channel.label() + " evaluated with a " +
                           std::string(to_string(expected)) + " formula but the model is " +
                           std::string(to_string(model.mode())));
    channel_index(expected, channel);
}

} // namespace

std::string_view to_string(Mode mode) { return mode == Mode::oam ? "oam" : "ordinary"; }

Mode parse_mode(std::string_view text) {
    if (text == "oam") return Mode::oam;
    if (text == "ordinary") return Mode::ordinary;
    throw ParseError("unknown mode '" + std::string(text) + "' (expected ordinary or oam)");
}

std::string Channel::label() const {
    return j_final.str() + (parity == Parity::odd ? "-" : "+");
}

const std::vector<Channel>& channels_for(Mode mode) {
    static const std::vector<Channel> ordinary{Channel::ordinary(0), Channel::ordinary(1)};
    static const std::vector<Channel> oam{Channel::oam(0), Channel::oam(1), Channel::oam(2)};
    return mode == Mode::oam ? oam : ordinary;
}

CaptureModel::CaptureModel(Mode mode)
    : mode_(mode), k_(channels_for(mode).size(), Rational(1)) {}

CaptureModel::CaptureModel(Mode mode, std::vector<Rational> k) : mode_(mode), k_(std::move(k)) {
    const auto& list = channels_for(mode_);
    if (k_.size() != list.size())
        throw DomainError(std::string(to_string(mode_)) + " mode needs " +
                          std::to_string(list.size()) + " K values, got " +
                          std::to_string(k_.size()));
    for (std::size_t i = 0; i < k_.size(); ++i)
        if (k_[i] < 0)
            throw DomainError("K(" + list[i].label() + ")=" + to_string(k_[i]) + " is negative");
}

const Rational& CaptureModel::k(const Channel& channel) const {
    return k_[channel_index(mode_, channel)];
}

ChannelCrossSection rose_closed_form(const Channel& channel, const PolarizationTriple& pol,
                                     const CaptureModel& model) {
    require_mode(model, Mode::ordinary, channel);
    const Rational x = pol.p_n() * pol.p();
    const Rational bracket = channel.j_final.twice() == 2 ? 3 + x : 1 - x;
    return {channel, QuadRational(model.k(channel) * bracket / 4)};
}

ChannelCrossSection oam_closed_form(const Channel& channel, const PolarizationTriple& pol,
                                    const CaptureModel& model) {
    require_mode(model, Mode::oam, channel);
    const Rational spin_oam = 1 - pol.p() * pol.p_l();
    const Rational spin_nuc = 1 - pol.p() * pol.p_n();
    const Rational oam_nuc = 1 - pol.p_l() * pol.p_n();
    const Rational& k = model.k(channel);

    QuadRational value;
    switch (channel.j_final.twice()) {
    case 4:
        value = QuadRational(k * (24 - 5 * spin_oam - 4 * spin_nuc - 5 * oam_nuc) / 24);
        break;
    case 2: {
        QuadRational bracket = QuadRational(3 * spin_oam) +
                               QuadRational(6, -4) * QuadRational(spin_nuc) +
                               QuadRational(3, 4) * QuadRational(oam_nuc);
        value = bracket * QuadRational(k / 24);
        break;
    }
    default:
        value = QuadRational(k * (1 - pol.p() * pol.p_l() + pol.p() * pol.p_n() -
                                  pol.p_l() * pol.p_n()) /
                             12);
        break;
    }
    return {channel, value};
}

ChannelCrossSection oam_oracle(const Channel& channel, const PolarizationTriple& pol,
                               const CaptureModel& model) {
    require_mode(model, Mode::oam, channel);
    const HalfInt j_final = channel.j_final;
    const HalfInt intermediate[] = {HalfInt::half(1), HalfInt::half(3)};

    const auto nuclear = spin_half_distribution(pol.p_n());
    const auto orbital = oam_distribution(pol.p_l());
    const auto spin = spin_half_distribution(pol.p());

    QuadRational sum;
    std::vector<SqrtRational> paths;
    for (const auto& [m_n, prob_n] : nuclear) {
        for (const auto& [m_l, prob_l] : orbital) {
            for (const auto& [mu, prob_mu] : spin) {
                const Rational weight = prob_n * prob_l * prob_mu;
                if (weight == 0) continue;
                const HalfInt m_mid = m_l + mu;
                const HalfInt m_final = m_mid + m_n;
                if (!is_valid_pair(j_final, m_final)) continue;

                paths.clear();
                for (HalfInt j_mid : intermediate) {
                    if (!is_valid_pair(j_mid, m_mid)) continue;
                    paths.push_back(clebsch_gordan(j_mid, m_mid, kHalf, m_n, j_final, m_final) *
                                    clebsch_gordan(kOne, m_l, kHalf, mu, j_mid, m_mid));
                }
                QuadRational amplitude_sq;
                for (const auto& a : paths)
                    for (const auto& b : paths) amplitude_sq += sqrt_product(a, b);
                sum += QuadRational(weight) * amplitude_sq;
            }
        }
    }
    return {channel, sum * QuadRational(model.k(channel))};
}

ChannelCrossSection rose_oracle(const Channel& channel, const PolarizationTriple& pol,
                                const CaptureModel& model) {
    require_mode(model, Mode::ordinary, channel);
    const HalfInt j_final = channel.j_final;
    const auto nuclear = spin_half_distribution(pol.p_n());
    const auto spin = spin_half_distribution(pol.p());

    Rational sum = 0;
    for (const auto& [m_n, prob_n] : nuclear) {
        for (const auto& [mu, prob_mu] : spin) {
            const HalfInt m_final = m_n + mu;
            if (!is_valid_pair(j_final, m_final)) continue;
            sum += prob_n * prob_mu * clebsch_gordan(kHalf, m_n, kHalf, mu, j_final, m_final).squared();
        }
    }
    return {channel, QuadRational(model.k(channel) * sum)};
}

ChannelCrossSection closed_form(const Channel& channel, const PolarizationTriple& pol,
                                const CaptureModel& model) {
    return model.mode() == Mode::oam ? oam_closed_form(channel, pol, model)
                                     : rose_closed_form(channel, pol, model);
}

ChannelCrossSection oracle(const Channel& channel, const PolarizationTriple& pol,
                           const CaptureModel& model) {
    return model.mode() == Mode::oam ? oam_oracle(channel, pol, model)
                                     : rose_oracle(channel, pol, model);
}

std::vector<ChannelCrossSection> channel_cross_sections(const PolarizationTriple& pol,
                                                        const CaptureModel& model) {
    std::vector<ChannelCrossSection> out;
    for (const auto& channel : model.channels()) out.push_back(closed_form(channel, pol, model));
    return out;
}

QuadRational total_cross_section(const PolarizationTriple& pol, const CaptureModel& model) {
    QuadRational total;
    for (const auto& cs : channel_cross_sections(pol, model)) total += cs.value;
    return total;
}

} // namespace he3oam
