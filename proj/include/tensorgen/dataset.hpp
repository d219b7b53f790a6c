#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tensorgen {

/// N x d matrix with entries in {0,1}, row-major, plus unique non-empty
/// feature names. Immutable in spirit: operations return new datasets.
struct BinaryDataset {
    std::int64_t n_rows = 0;
    std::int64_t n_cols = 0;
    std::vector<std::string> feature_names;
    std::vector<std::uint8_t> values;  // row-major, n_rows * n_cols

    std::uint8_t at(std::int64_t r, std::int64_t c) const {
        return values[static_cast<std::size_t>(r) * n_cols + c];
    }
    std::uint8_t* row(std::int64_t r) {
        return values.data() + static_cast<std::size_t>(r) * n_cols;
    }
    const std::uint8_t* row(std::int64_t r) const {
        return values.data() + static_cast<std::size_t>(r) * n_cols;
    }

    /// Throws InputError if any invariant is broken (entries 0/1, names
    /// unique and non-empty, n_rows >= 1, n_cols >= 1).
    void validate() const;
};

struct CodeListRecord {
    std::string record_id;
    std::string code;
};

/// Dense CSV: header of feature names, then rows of 0/1 tokens.
BinaryDataset load_csv(const std::string& path);
void save_csv(const BinaryDataset& data, const std::string& path);

/// Long format: two-column CSV `record_id,code` with header, one code
/// occurrence per line.
std::vector<CodeListRecord> load_code_list(const std::string& path);

/// One row per distinct record_id in first-appearance order. Keeps the
/// top_k most frequent codes (frequency = number of distinct records
/// presenting the code; ties broken lexicographically); retained columns
/// are sorted lexicographically. Rows left all-zero are kept.
BinaryDataset binarize_code_list(const std::vector<CodeListRecord>& records,
                                 std::int64_t top_k);

/// Deterministic seeded partition into (train, holdout). Holdout gets
/// floor(holdout_fraction * N) rows; both parts must be non-empty.
std::pair<BinaryDataset, BinaryDataset> split_holdout(const BinaryDataset& data,
                                                      double holdout_fraction,
                                                      std::uint64_t seed);

}  // namespace tensorgen
