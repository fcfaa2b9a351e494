#ifndef TOPQ_METRICS_HPP
#define TOPQ_METRICS_HPP

#include <optional>

#include "topq/dataset.hpp"
#include "topq/distribution.hpp"
#include "topq/plugin.hpp"

namespace topq {

// Cost weights of the two error types: `a` multiplies missed positives
// (false negatives), `b` multiplies false positives. Requires a >= 0, b >= 0
// and a + b > 0.
class CostParams {
public:
    CostParams(double a, double b);
    CostParams() : CostParams(1.0, 1.0) {}

    double a() const { return a_; }
    double b() const { return b_; }

private:
    double a_;
    double b_;
};

// The posterior cutoff b/(a+b) of the unconstrained cost-optimal classifier.
double bayes_threshold(const CostParams& costs);

struct MetricsReport {
    double cost;
    std::optional<double> precision;  // empty when no mass is predicted positive
    double recall;
    double tpr;  // == recall
    double fpr;
    double ppr;
    double prevalence;
};

// Expected cost a*E[(1-H)Z] + b*E[H(1-Z)] over the score distribution; the
// tower property turns the label indicators of the cost definition into the
// posterior scores themselves.
double cost_posterior(const DiscreteDistribution& dist, const ThresholdClassifier& c,
                      const CostParams& costs);

// Full report in posterior mode. Requires prevalence E[Z] in (0, 1).
MetricsReport metrics_posterior(const DiscreteDistribution& dist, const ThresholdClassifier& c,
                                const CostParams& costs);

// Full report with the indicator taken from actual labels; scores need not
// be calibrated. Requires both labels present.
MetricsReport metrics_labeled(const LabeledDataset& data, const ThresholdClassifier& c,
                              const CostParams& costs);

// Which rate constraint the threshold classifier at q optimally satisfies,
// by comparing q against the Bayes threshold b/(a+b). Equality within 1e-12
// maps to unconstrained_optimum.
enum class Regime { constraint_binding_below, constraint_binding_above, unconstrained_optimum };

Regime regime(double q, const CostParams& costs);

const char* regime_name(Regime r);

}  // namespace topq

#endif
