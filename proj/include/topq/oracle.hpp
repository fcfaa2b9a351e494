#ifndef TOPQ_ORACLE_HPP
#define TOPQ_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "topq/distribution.hpp"
#include "topq/metrics.hpp"
#include "topq/plugin.hpp"

namespace topq {

// Exact minimum of the expected cost over all randomized decision
// classifiers on a finite instance, with the witnessing per-atom decisions.
struct OracleResult {
    double optimum;
    std::vector<double> witness;  // values in [0, 1], at most one strictly inside
    ConstraintSpec regime_checked;
};

// Brute-force minimization of a*sum w_i (1-h_i) z_i + b*sum w_i h_i (1-z_i)
// over h in [0,1]^n subject to the rate constraint on sum w_i h_i. The
// objective and constraint are affine in h, so some optimum has at most one
// fractional coordinate; all binary assignments plus all single-fractional
// completions that meet the rate exactly are enumerated. Requires at most 16
// atoms.
OracleResult brute_force_optimum(const DiscreteDistribution& dist, const CostParams& costs,
                                 const ConstraintSpec& constraint);

struct TheoremCheck {
    Regime regime;
    double q;
    double m;
    double cost_hq;
    double constrained_optimum;  // oracle under the regime-matching constraint
    double constrained_gap;
    double equality_optimum;     // oracle under the rate-equality constraint
    double equality_gap;
    bool passed;                 // both gaps <= 1e-10
};

// Builds the plug-in classifier (lower quantile), classifies its regime, and
// compares its cost against the brute-force optimum under the matching
// constraint and, always, under the rate-equality constraint.
TheoremCheck check_theorem(const DiscreteDistribution& dist, double alpha,
                           const CostParams& costs);

struct RandomInstance {
    DiscreteDistribution dist;
    double alpha;
    CostParams costs;
};

// Deterministic random test instance: up to max_atoms uniform score atoms
// with symmetric-simplex weights, alpha in (0.05, 0.95), costs uniform on
// (0, 10)^2 with a + b >= 1e-6; with probability 0.2 one atom is forced to
// exactly b/(a+b). Requires max_atoms in [1, 16].
RandomInstance random_instance(std::uint64_t seed, int max_atoms);

// True when some atom value equals b/(a+b) exactly.
bool has_atom_at_bayes_threshold(const DiscreteDistribution& dist, const CostParams& costs);

}  // namespace topq

#endif
