#ifndef TOPQ_PLUGIN_HPP
#define TOPQ_PLUGIN_HPP

#include <optional>
#include <utility>

#include "topq/distribution.hpp"

namespace topq {

enum class QuantileChoice { lower, upper };

// Randomized decision classifier of the threshold form: predicts positive
// with probability 1 above the threshold q, with probability m on the event
// {Z = q}, and 0 below. alpha records the target predicted positive rate the
// classifier was built for; evaluation does not use it.
class ThresholdClassifier {
public:
    ThresholdClassifier(double q, double m, double alpha);

    double q() const { return q_; }
    double m() const { return m_; }
    double alpha() const { return alpha_; }

    // 1 if z > q, m if z == q, 0 if z < q. Requires z in [0, 1].
    double evaluate(double z) const;

private:
    double q_;
    double m_;
    double alpha_;
};

// Constraint on the predicted positive rate E[H].
enum class ConstraintKind { rate_at_least, rate_at_most, rate_equal, unconstrained };

class ConstraintSpec {
public:
    static ConstraintSpec at_least(double alpha) { return {ConstraintKind::rate_at_least, alpha}; }
    static ConstraintSpec at_most(double alpha) { return {ConstraintKind::rate_at_most, alpha}; }
    static ConstraintSpec equal(double alpha) { return {ConstraintKind::rate_equal, alpha}; }
    static ConstraintSpec none() { return ConstraintSpec(ConstraintKind::unconstrained); }

    ConstraintKind kind() const { return kind_; }

    // Present iff the constraint is not `unconstrained`.
    std::optional<double> alpha() const { return alpha_; }

private:
    ConstraintSpec(ConstraintKind kind);
    ConstraintSpec(ConstraintKind kind, double alpha);

    ConstraintKind kind_;
    std::optional<double> alpha_;
};

// Constructs the classifier whose predicted positive rate on `dist` is
// exactly alpha: q is a (1-alpha)-quantile (lower or upper endpoint per
// `choice`) and the randomization mass on {Z = q} is solved for the exact
// rate. A solved mass outside [0, 1] by more than 1e-9 indicates an internal
// quantile/CDF inconsistency and throws std::logic_error.
ThresholdClassifier build_plugin(const DiscreteDistribution& dist, double alpha,
                                 QuantileChoice choice = QuantileChoice::lower);

// E[H] under `dist`.
double predicted_positive_rate(const ThresholdClassifier& c, const DiscreteDistribution& dist);

// The deterministic classifiers (q, m=0) and (q, m=1) that bound c pointwise.
std::pair<ThresholdClassifier, ThresholdClassifier> sandwich(const ThresholdClassifier& c);

}  // namespace topq

#endif
