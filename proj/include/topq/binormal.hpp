#ifndef TOPQ_BINORMAL_HPP
#define TOPQ_BINORMAL_HPP

#include <cstdint>

#include "topq/dataset.hpp"
#include "topq/metrics.hpp"

namespace topq {

// Two-class population with normal class-conditional feature distributions
// of equal variance: X | positive ~ N(nu, sigma^2), X | negative ~
// N(mu, sigma^2), positive prevalence p. Requires mu < nu, sigma > 0 and
// p in (0, 1); the posterior is then a strictly increasing logistic
// function of the feature.
class BinormalModel {
public:
    BinormalModel(double p, double mu, double nu, double sigma);

    double p() const { return p_; }
    double mu() const { return mu_; }
    double nu() const { return nu_; }
    double sigma() const { return sigma_; }

    // Logistic coefficients of the posterior 1 / (1 + exp(a*x + b)).
    double coeff_a() const { return coeff_a_; }
    double coeff_b() const { return coeff_b_; }

    // P[positive | X = x], in (0, 1).
    double posterior(double x) const;

    // P[X <= x], the two-normal mixture CDF.
    double mixture_cdf(double x) const;

private:
    double p_;
    double mu_;
    double nu_;
    double sigma_;
    double coeff_a_;
    double coeff_b_;
};

// Feature-space cut point of the top fraction alpha: the x with
// P[X <= x] = 1 - alpha, found by bracketing bisection to a CDF residual of
// at most 1e-12. The initial bracket [mu - 10*sigma, nu + 10*sigma] is
// doubled outward when needed; more than 60 doublings throws.
double solve_x_alpha(const BinormalModel& model, double alpha);

struct BinormalPluginResult {
    double x_alpha;
    double q;        // posterior threshold, = posterior(x_alpha)
    double coeff_a;
    double coeff_b;
    MetricsReport report;
};

// The optimal top-fraction classifier in closed form. The posterior is
// continuous, so no randomization is needed (m = 0) and {posterior > q}
// equals {X > x_alpha}.
BinormalPluginResult analytic_plugin(const BinormalModel& model, double alpha,
                                     const CostParams& costs);

// n i.i.d. draws of (posterior score, label), weights 1. Deterministic for a
// given seed on a fixed build; records appear in draw order.
LabeledDataset sample(const BinormalModel& model, std::size_t n, std::uint64_t seed);

}  // namespace topq

#endif
