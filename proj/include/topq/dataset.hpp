#ifndef TOPQ_DATASET_HPP
#define TOPQ_DATASET_HPP

#include <vector>

namespace topq {

// One scored, labeled observation. The score is a posterior-style probability
// in [0, 1]; the label is -1 or +1; the weight is a positive sampling weight.
struct LabeledRecord {
    double score;
    int label;
    double weight;
};

struct LabeledDataset {
    std::vector<LabeledRecord> records;

    bool empty() const { return records.empty(); }
    std::size_t size() const { return records.size(); }
};

// Validates scores in [0, 1], labels in {-1, +1}, weights > 0, non-empty.
// Throws std::invalid_argument on the first violation.
LabeledDataset make_dataset(std::vector<LabeledRecord> records);

}  // namespace topq

#endif
