#pragma once

#include "he3oam/half_int.hpp"
#include "he3oam/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace he3oam {

/// Experimental polarization knobs: neutron spin p, neutron OAM P_L and 3He
/// nuclear spin P_N. All are helicities along the neutron wavevector and lie
/// in [-1, 1].
class PolarizationTriple {
  public:
    PolarizationTriple() = default;
    /// Throws DomainError naming the component that leaves [-1, 1].
    PolarizationTriple(Rational p, Rational p_l, Rational p_n);

    const Rational& p() const { return p_; }
    const Rational& p_l() const { return p_l_; }
    const Rational& p_n() const { return p_n_; }

    PolarizationTriple flipped() const { return {-p_, -p_l_, -p_n_}; }

    /// "(p, P_L, P_N)" with exact rationals.
    std::string str() const;

    bool operator==(const PolarizationTriple&) const = default;
    /// Lexicographic on (p, P_L, P_N).
    bool operator<(const PolarizationTriple& o) const;

  private:
    Rational p_ = 0, p_l_ = 0, p_n_ = 0;
};

/// Occupation probabilities of magnetic substates; sums to exactly 1.
class SubstateDistribution {
  public:
    using Entry = std::pair<HalfInt, Rational>;

    explicit SubstateDistribution(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Probability of substate m; zero for substates not listed.
    Rational probability(HalfInt m) const;

    /// (1/j) * sum m p(m); recovers the polarization the distribution was built from.
    Rational polarization(HalfInt j) const;

  private:
    std::vector<Entry> entries_;
};

/// {+1/2: (1+P)/2, -1/2: (1-P)/2}. Throws DomainError when |P| > 1.
SubstateDistribution spin_half_distribution(const Rational& polarization);

/// {+1: (1+P_L)/2, -1: (1-P_L)/2, 0: 0}. Only m_L = +-1 is ever populated.
SubstateDistribution oam_distribution(const Rational& polarization);

/// n evenly spaced exact values from -1 to 1 inclusive. Throws DomainError for n < 2.
std::vector<Rational> polarization_grid(int n);

/// Every triple of the n^3 grid, ordered lexicographically.
std::vector<PolarizationTriple> polarization_cube(int n);

} // namespace he3oam
