#include "he3oam/polarization.hpp"

#include "he3oam/errors.hpp"

namespace he3oam {

namespace {

void require_unit_interval(const Rational& value, const char* name) {
    if (value > 1 || value < -1)
        throw DomainError(std::string(name) + "=" + to_string(value) + " is outside [-1, 1]");
}

} // namespace

PolarizationTriple::PolarizationTriple(Rational p, Rational p_l, Rational p_n)
    : p_(std::move(p)), p_l_(std::move(p_l)), p_n_(std::move(p_n)) {
    require_unit_interval(p_, "p");
    require_unit_interval(p_l_, "P_L");
    require_unit_interval(p_n_, "P_N");
}

std::string PolarizationTriple::str() const {
    return "(" + to_string(p_) + ", " + to_string(p_l_) + ", " + to_string(p_n_) + ")";
}

bool PolarizationTriple::operator<(const PolarizationTriple& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    if (p_l_ != o.p_l_) return p_l_ < o.p_l_;
    return p_n_ < o.p_n_;
}

SubstateDistribution::SubstateDistribution(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
    Rational total = 0;
    for (const auto& [m, prob] : entries_) {
        if (prob < 0 || prob > 1)
            throw DomainError("probability " + to_string(prob) + " for m=" + m.str(true));
        total += prob;
    }
    if (total != 1) throw DomainError("substate probabilities sum to " + to_string(total));
}

Rational SubstateDistribution::probability(HalfInt m) const {
    for (const auto& [sub, prob] : entries_)
        if (sub == m) return prob;
    return 0;
}

Rational SubstateDistribution::polarization(HalfInt j) const {
    if (j.twice() <= 0) throw DomainError("polarization needs j > 0");
    Rational weighted = 0;
    for (const auto& [m, prob] : entries_) weighted += m.value() * prob;
    return weighted / j.value();
}

SubstateDistribution spin_half_distribution(const Rational& polarization) {
    require_unit_interval(polarization, "polarization");
    return SubstateDistribution({{HalfInt::half(1), (1 + polarization) / 2},
                                 {HalfInt::half(-1), (1 - polarization) / 2}});
}

SubstateDistribution oam_distribution(const Rational& polarization) {
    require_unit_interval(polarization, "P_L");
    return SubstateDistribution({{HalfInt::integer(1), (1 + polarization) / 2},
                                 {HalfInt::integer(-1), (1 - polarization) / 2},
                                 {HalfInt::integer(0), Rational(0)}});
}

std::vector<Rational> polarization_grid(int n) {
    if (n < 2) throw DomainError("grid needs at least 2 points per axis, got " + std::to_string(n));
    std::vector<Rational> values;
    values.reserve(n);
    for (int i = 0; i < n; ++i) values.emplace_back(Rational(2 * i, n - 1) - 1);
    return values;
}

std::vector<PolarizationTriple> polarization_cube(int n) {
    const auto axis = polarization_grid(n);
    std::vector<PolarizationTriple> cube;
    cube.reserve(axis.size() * axis.size() * axis.size());
    for (const auto& p : axis)
        for (const auto& p_l : axis)
            for (const auto& p_n : axis) cube.emplace_back(p, p_l, p_n);
    return cube;
}

} // namespace he3oam
