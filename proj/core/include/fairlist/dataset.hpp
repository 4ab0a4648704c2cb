#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fairlist/bitvector.hpp"
#include "fairlist/table.hpp"

namespace fairlist {

/// Fully binarized training data: one bit vector per (one-hot) feature plus
/// the label vector and the protected-group vector. Feature columns exclude
/// the label and sensitive attribute. Group bit 1 means membership in the
/// group named by the sensitive column's "one" value.
struct BinaryDataset {
    std::size_t num_samples = 0;
    std::vector<std::string> feature_names;
    std::vector<BitVector> features;
    BitVector labels;
    BitVector group;

    std::size_t num_features() const { return features.size(); }
    std::size_t group1_count() const { return group.count(); }
    std::size_t group0_count() const { return num_samples - group.count(); }
    std::size_t positive_count() const { return labels.count(); }
};

/// One-hot encode a table: every non-label, non-sensitive column becomes one
/// "col:value" indicator per category, categories in first-appearance order
/// (two-valued columns yield two complementary indicators). The label and
/// sensitive columns map to labels/group via binary_mapping and are excluded
/// from the feature matrix.
BinaryDataset binarize(const RawTable& table);

/// Rows of `data` selected by ascending sample index. Feature order and
/// names are preserved.
BinaryDataset subset(const BinaryDataset& data, const std::vector<std::size_t>& rows);

/// On-disk interchange: a directory holding features.txt, labels.txt and
/// group.txt. Each line is "{tag} b0 b1 ... b:M-1" with space-separated bits;
/// features.txt tags are "{feature:name}", labels.txt holds the two lines
/// "{label=0}" / "{label=1}" (complementary rows), group.txt the single line
/// "{group=1}".
void write_dataset(const BinaryDataset& data, const std::string& dir);
BinaryDataset read_dataset(const std::string& dir);

} // namespace fairlist
