#ifndef TOPQ_SPECFILE_HPP
#define TOPQ_SPECFILE_HPP

#include <iosfwd>
#include <string>

#include "topq/plugin.hpp"

namespace topq {

// On-disk description of a fitted threshold classifier. q, m and alpha are
// rendered with 17 significant digits and round-trip bit-exactly; source and
// created_at are free-text provenance.
struct ClassifierSpecFile {
    double q = 0.0;
    double m = 0.0;
    double alpha = 0.5;
    std::string source;
    std::string created_at;

    ThresholdClassifier classifier() const { return {q, m, alpha}; }
};

std::string serialize_spec(const ClassifierSpecFile& spec);

ClassifierSpecFile parse_spec(std::istream& in, const std::string& name);
ClassifierSpecFile parse_spec_file(const std::string& path);

// Current UTC time as an ISO-8601 timestamp.
std::string iso8601_now();

}  // namespace topq

#endif
