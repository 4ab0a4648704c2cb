#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "fairlist/bitvector.hpp"
#include "fairlist/dataset.hpp"

namespace fairlist {

/// One literal of a rule body: a feature index, possibly negated.
struct Literal {
    std::uint32_t feature = 0;
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

/// A mined rule body (conjunction of 1..2 literals) together with its capture
/// set over the dataset it was mined from.
struct Antecedent {
    std::vector<Literal> literals;
    std::string name;
    BitVector capture;
    std::size_t support = 0;
};

struct MiningConfig {
    double min_support = 0.01;     ///< fraction of samples; pair rules below ceil(s*M) are dropped
    bool include_negations = true; ///< also emit "not f" single-literal rules
    std::size_t max_clause_arity = 2;
};

/// The candidate rule pool the search branches over.
struct AntecedentSet {
    std::vector<Antecedent> items;

    std::size_t size() const { return items.size(); }
    const Antecedent& operator[](std::size_t i) const { return items[i]; }

    /// Index of the antecedent with this display name, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find(const std::string& name) const;
};

/// Deterministic candidate generation: every single feature, every negated
/// single feature (if enabled), then every pair {i,j} (i<j) of positive
/// literals whose joint support reaches ceil(min_support * M). Order: singles
/// by feature index, negations by feature index, pairs lexicographic.
AntecedentSet mine_antecedents(const BinaryDataset& data, const MiningConfig& config);

/// Same antecedents re-captured over a row subset (as produced by
/// fairlist::subset). Indices and names are stable; supports shrink.
AntecedentSet subset_antecedents(const AntecedentSet& set,
                                 const BinaryDataset& subset_data,
                                 const std::vector<std::size_t>& rows);

/// Rebuild captures for stored literal lists against a dataset.
AntecedentSet capture_antecedents(const std::vector<std::vector<Literal>>& bodies,
                                  const std::vector<std::string>& names,
                                  const BinaryDataset& data);

/// Display name for a literal list: "f", "not f", "f && g".
std::string antecedent_name(const std::vector<Literal>& literals,
                            const std::vector<std::string>& feature_names);

/// CSV persistence (id,name,support,literals). Literals serialize as
/// "+3", "-3" or "+3&+7" against the dataset's feature order. Reading
/// recomputes captures against `data` and validates the stored support.
void write_antecedents_csv(const AntecedentSet& set, const std::string& path);
AntecedentSet read_antecedents_csv(const std::string& path, const BinaryDataset& data);

} // namespace fairlist
