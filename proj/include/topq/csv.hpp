#ifndef TOPQ_CSV_HPP
#define TOPQ_CSV_HPP

#include <iosfwd>
#include <string>

#include "topq/dataset.hpp"

namespace topq {

// Reads a scored dataset from CSV. The header row names the columns; `score`
// (decimal in [0, 1]) and `label` (-1/1, or 0/1 with 0 mapped to -1) are
// required, `weight` (positive decimal, default 1) is optional. Unknown
// columns are rejected. Lines starting with '#' and blank lines are skipped.
// Malformed rows abort with the offending line number in the message.
LabeledDataset parse_csv(const std::string& path);

// Same, reading from a stream; `name` is used in error messages.
LabeledDataset parse_csv(std::istream& in, const std::string& name);

}  // namespace topq

#endif
