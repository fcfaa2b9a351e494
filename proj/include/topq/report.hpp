#ifndef TOPQ_REPORT_HPP
#define TOPQ_REPORT_HPP

#include <string>

#include "topq/binormal.hpp"
#include "topq/metrics.hpp"

namespace topq {

// key = value lines in a fixed order (cost, precision, recall, tpr, fpr,
// ppr, prevalence), decimals at 17 significant digits. An undefined
// precision renders as the token `undefined`.
std::string format_report(const MetricsReport& report);

// The analytic result: x_alpha, q, the logistic coefficients, then the
// metrics report.
std::string format_binormal_result(const BinormalPluginResult& result);

}  // namespace topq

#endif
