#ifndef TOPQ_DISTRIBUTION_HPP
#define TOPQ_DISTRIBUTION_HPP

#include <vector>

#include "topq/dataset.hpp"

namespace topq {

// One support point of a discrete score distribution.
struct Atom {
    double value;  // score in [0, 1]
    double mass;   // probability mass in (0, 1]
};

// P[Z < z], P[Z = z], P[Z > z] at a single point.
struct CdfParts {
    double p_lt;
    double p_eq;
    double p_gt;
};

// The closed interval of all level-quantiles. Collapses to a point unless the
// CDF is flat at exactly the requested level.
struct QuantileSet {
    double lo;
    double hi;
};

// Finite discrete distribution of the posterior positive-class probability.
// Values are strictly increasing and masses sum to one; both are established
// at construction (duplicate values merged, weights rescaled) and never
// mutated afterwards, so instances are safe to share across threads.
class DiscreteDistribution {
public:
    // Takes raw (value, weight) pairs. Requires a non-empty list, values in
    // [0, 1] and weights > 0. Atom identity is exact value equality; nearby
    // values are not merged.
    explicit DiscreteDistribution(std::vector<Atom> raw_atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    CdfParts cdf_parts(double z) const;

    // All z with P[Z < z] <= level <= P[Z <= z], for level in (0, 1).
    // The lower endpoint equals the conventional min{z : P[Z <= z] >= level}.
    QuantileSet quantile_set(double level) const;

private:
    std::vector<Atom> atoms_;
};

// Weighted marginal of the score column; labels are ignored.
DiscreteDistribution marginal_from_labeled(const LabeledDataset& data);

}  // namespace topq

#endif
