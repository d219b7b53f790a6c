#include "tensorgen/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "tensorgen/errors.hpp"
#include "tensorgen/rng.hpp"

namespace tensorgen {

namespace {

std::vector<std::string> split_line(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

// Strips a trailing '\r' so CRLF files load the same as LF files.
bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

void check_names(const std::vector<std::string>& names) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw InputError("empty feature name in header");
        if (!seen.insert(n).second)
            throw InputError("duplicate feature name in header: '" + n + "'");
    }
}

}  // namespace

void BinaryDataset::validate() const {
    if (n_rows < 1 || n_cols < 1)
        throw InputError("dataset must have at least one row and one column");
    if (static_cast<std::int64_t>(feature_names.size()) != n_cols)
        throw InputError("feature name count does not match column count");
    check_names(feature_names);
    if (values.size() != static_cast<std::size_t>(n_rows) * n_cols)
        throw InputError("value buffer size does not match dimensions");
    for (std::uint8_t v : values)
        if (v != 0 && v != 1) throw InputError("dataset entry outside {0,1}");
}

BinaryDataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);

    std::string line;
    if (!read_line(in, line)) throw InputError("empty file: " + path);
    BinaryDataset data;
    data.feature_names = split_line(line, ',');
    check_names(data.feature_names);
    data.n_cols = static_cast<std::int64_t>(data.feature_names.size());

    std::int64_t row_no = 0;
    while (read_line(in, line)) {
        if (line.empty() && in.peek() == EOF) break;  // trailing newline
        ++row_no;
        auto tokens = split_line(line, ',');
        if (static_cast<std::int64_t>(tokens.size()) != data.n_cols)
            throw InputError("row " + std::to_string(row_no) + " has " +
                             std::to_string(tokens.size()) + " fields, expected " +
                             std::to_string(data.n_cols));
        for (const auto& tok : tokens) {
            if (tok == "0")
                data.values.push_back(0);
            else if (tok == "1")
                data.values.push_back(1);
            else
                throw InputError("non-binary token '" + tok + "' in row " +
                                 std::to_string(row_no));
        }
    }
    data.n_rows = row_no;
    if (data.n_rows == 0) throw InputError("no data rows in " + path);
    return data;
}

void save_csv(const BinaryDataset& data, const std::string& path) {
    data.validate();
    for (const auto& n : data.feature_names)
        if (n.find(',') != std::string::npos || n.find('\n') != std::string::npos)
            throw InputError("feature name not CSV-safe: '" + n + "'");
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    for (std::int64_t c = 0; c < data.n_cols; ++c) {
        if (c) out << ',';
        out << data.feature_names[c];
    }
    out << '\n';
    for (std::int64_t r = 0; r < data.n_rows; ++r) {
        const std::uint8_t* row = data.row(r);
        for (std::int64_t c = 0; c < data.n_cols; ++c) {
            if (c) out << ',';
            out << (row[c] ? '1' : '0');
        }
        out << '\n';
    }
    if (!out) throw InputError("write failed: " + path);
}

std::vector<CodeListRecord> load_code_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::string line;
    if (!read_line(in, line)) throw InputError("empty file: " + path);
    std::vector<CodeListRecord> records;
    std::int64_t row_no = 1;
    while (read_line(in, line)) {
        ++row_no;
        if (line.empty() && in.peek() == EOF) break;
        auto tokens = split_line(line, ',');
        if (tokens.size() != 2)
            throw InputError("line " + std::to_string(row_no) +
                             ": expected `record_id,code`");
        if (tokens[0].empty() || tokens[1].empty())
            throw InputError("line " + std::to_string(row_no) +
                             ": empty record_id or code");
        records.push_back({std::move(tokens[0]), std::move(tokens[1])});
    }
    return records;
}

BinaryDataset binarize_code_list(const std::vector<CodeListRecord>& records,
                                 std::int64_t top_k) {
    if (records.empty()) throw InputError("empty record list");
    if (top_k < 1) throw InputError("top_k must be >= 1");

    // First-appearance order of records; (record, code) pairs deduped so a
    // code's frequency is the number of distinct records presenting it.
    std::vector<std::string> record_order;
    std::unordered_map<std::string, std::int64_t> record_index;
    std::unordered_map<std::string, std::unordered_set<std::string>> codes_of;
    for (const auto& rec : records) {
        if (rec.record_id.empty() || rec.code.empty())
            throw InputError("record with empty record_id or code");
        auto [it, inserted] = record_index.try_emplace(
            rec.record_id, static_cast<std::int64_t>(record_order.size()));
        if (inserted) record_order.push_back(rec.record_id);
        codes_of[rec.record_id].insert(rec.code);
    }

    std::unordered_map<std::string, std::int64_t> freq;
    for (const auto& [id, codes] : codes_of)
        for (const auto& c : codes) ++freq[c];

    std::vector<std::pair<std::string, std::int64_t>> by_freq(freq.begin(), freq.end());
    std::sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (static_cast<std::int64_t>(by_freq.size()) > top_k) by_freq.resize(top_k);

    std::vector<std::string> columns;
    columns.reserve(by_freq.size());
    for (auto& [code, _] : by_freq) columns.push_back(code);
    std::sort(columns.begin(), columns.end());

    std::unordered_map<std::string, std::int64_t> col_index;
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(columns.size()); ++c)
        col_index[columns[c]] = c;

    BinaryDataset data;
    data.n_rows = static_cast<std::int64_t>(record_order.size());
    data.n_cols = static_cast<std::int64_t>(columns.size());
    data.feature_names = columns;
    data.values.assign(static_cast<std::size_t>(data.n_rows) * data.n_cols, 0);
    for (std::int64_t r = 0; r < data.n_rows; ++r) {
        for (const auto& code : codes_of[record_order[r]]) {
            auto it = col_index.find(code);
            if (it != col_index.end()) data.row(r)[it->second] = 1;
        }
    }
    return data;
}

std::pair<BinaryDataset, BinaryDataset> split_holdout(const BinaryDataset& data,
                                                      double holdout_fraction,
                                                      std::uint64_t seed) {
    if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0))
        throw InputError("holdout_fraction must be in (0,1)");
    const std::int64_t n_hold =
        static_cast<std::int64_t>(std::floor(holdout_fraction * data.n_rows));
    const std::int64_t n_train = data.n_rows - n_hold;
    if (n_hold < 1 || n_train < 1)
        throw InputError("holdout_fraction " + std::to_string(holdout_fraction) +
                         " yields an empty part for N=" + std::to_string(data.n_rows));

    std::vector<std::int64_t> idx(data.n_rows);
    for (std::int64_t i = 0; i < data.n_rows; ++i) idx[i] = i;
    SplitMix64 rng(seed);
    for (std::int64_t i = data.n_rows - 1; i > 0; --i)
        std::swap(idx[i], idx[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);

    std::vector<std::int64_t> hold_idx(idx.begin(), idx.begin() + n_hold);
    std::vector<std::int64_t> train_idx(idx.begin() + n_hold, idx.end());
    std::sort(hold_idx.begin(), hold_idx.end());
    std::sort(train_idx.begin(), train_idx.end());

    auto take = [&](const std::vector<std::int64_t>& rows) {
        BinaryDataset part;
        part.n_rows = static_cast<std::int64_t>(rows.size());
        part.n_cols = data.n_cols;
        part.feature_names = data.feature_names;
        part.values.reserve(rows.size() * data.n_cols);
        for (std::int64_t r : rows)
            part.values.insert(part.values.end(), data.row(r), data.row(r) + data.n_cols);
        return part;
    };
    return {take(train_idx), take(hold_idx)};
}

}  // namespace tensorgen
