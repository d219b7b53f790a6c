#include "tensorgen/model.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "loglik_tables.hpp"
#include "tensorgen/errors.hpp"
#include "tensorgen/parallel.hpp"
#include "tensorgen/rng.hpp"

namespace tensorgen {

namespace {

constexpr double kWeightSumTol = 1e-9;

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_feature_names(const std::vector<std::string>& names, std::int64_t d) {
    if (static_cast<std::int64_t>(names.size()) != d)
        throw InputError("feature name count does not match d");
    for (const auto& n : names)
        if (n.empty()) throw InputError("empty feature name");
}

}  // namespace

void NaiveBayesModel::validate() const {
    if (k() < 1 || d() < 1) throw InputError("model needs k >= 1 and d >= 1");
    if (cond_probs.cols() != k()) throw InputError("cond_probs shape mismatch");
    if ((weights.array() < 0.0).any())
        throw InputError("negative mixing weight");
    if (std::abs(weights.sum() - 1.0) > kWeightSumTol)
        throw InputError("mixing weights sum to " + fmt17(weights.sum()) +
                         ", expected 1");
    if ((cond_probs.array() < 0.0).any() || (cond_probs.array() > 1.0).any())
        throw InputError("conditional probability outside [0,1]");
    check_feature_names(feature_names, d());
}

void BaselineModel::validate() const {
    if (d() < 1) throw InputError("baseline model needs d >= 1");
    if ((freqs.array() < 0.0).any() || (freqs.array() > 1.0).any())
        throw InputError("baseline frequency outside [0,1]");
    check_feature_names(feature_names, d());
}

BinaryDataset sample(const NaiveBayesModel& model, std::int64_t m, std::uint64_t seed) {
    model.validate();
    if (m < 1) throw InputError("sample count m must be >= 1");
    const std::int64_t k = model.k(), d = model.d();

    Eigen::VectorXd cum(k);
    double acc = 0.0;
    for (std::int64_t j = 0; j < k; ++j) cum[j] = (acc += model.weights[j]);

    BinaryDataset out;
    out.n_rows = m;
    out.n_cols = d;
    out.feature_names = model.feature_names;
    out.values.assign(static_cast<std::size_t>(m) * d, 0);
    for_each_block(m, kDefaultBlock, [&](std::size_t, std::int64_t lo, std::int64_t hi) {
        for (std::int64_t r = lo; r < hi; ++r) {
            SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(r));
            const double u = rng.next_double();
            std::int64_t j = 0;
            while (j + 1 < k && u >= cum[j]) ++j;
            std::uint8_t* row = out.row(r);
            for (std::int64_t i = 0; i < d; ++i)
                row[i] = rng.next_double() < model.cond_probs(i, j) ? 1 : 0;
        }
    });
    return out;
}

BinaryDataset sample_baseline(const BaselineModel& model, std::int64_t m,
                              std::uint64_t seed) {
    model.validate();
    if (m < 1) throw InputError("sample count m must be >= 1");
    const std::int64_t d = model.d();
    BinaryDataset out;
    out.n_rows = m;
    out.n_cols = d;
    out.feature_names = model.feature_names;
    out.values.assign(static_cast<std::size_t>(m) * d, 0);
    for_each_block(m, kDefaultBlock, [&](std::size_t, std::int64_t lo, std::int64_t hi) {
        for (std::int64_t r = lo; r < hi; ++r) {
            SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(r));
            std::uint8_t* row = out.row(r);
            for (std::int64_t i = 0; i < d; ++i)
                row[i] = rng.next_double() < model.freqs[i] ? 1 : 0;
        }
    });
    return out;
}

BaselineModel fit_baseline(const BinaryDataset& data) {
    data.validate();
    BaselineModel model;
    model.freqs = Eigen::VectorXd::Zero(data.n_cols);
    for (std::int64_t r = 0; r < data.n_rows; ++r) {
        const std::uint8_t* row = data.row(r);
        for (std::int64_t c = 0; c < data.n_cols; ++c) model.freqs[c] += row[c];
    }
    model.freqs /= static_cast<double>(data.n_rows);
    model.feature_names = data.feature_names;
    return model;
}

double log_likelihood(const NaiveBayesModel& model, const BinaryDataset& data) {
    model.validate();
    if (model.d() != data.n_cols)
        throw InputError("model has d=" + std::to_string(model.d()) +
                         " but data has d=" + std::to_string(data.n_cols));
    const auto tables = detail::ComponentLogTables::build(model);
    const std::int64_t k = model.k();
    const std::int64_t nblocks = (data.n_rows + kDefaultBlock - 1) / kDefaultBlock;
    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
    for_each_block(data.n_rows, kDefaultBlock,
                   [&](std::size_t b, std::int64_t lo, std::int64_t hi) {
                       std::vector<double> scores(k);
                       double acc = 0.0;
                       for (std::int64_t r = lo; r < hi; ++r) {
                           tables.row_scores(data.row(r), scores.data());
                           acc += detail::log_sum_exp(scores.data(), k);
                       }
                       partial[b] = acc;
                   });
    double total = 0.0;
    for (double p : partial) total += p;  // fixed block order
    return total;
}

// ---------------------------------------------------------------------------
// .nbm text format, version 1:
//   nbm 1 mixture            | nbm 1 baseline
//   k <k>                    |
//   d <d>                    | d <d>
//   features                 | features
//   <one name per line, d>   | <one name per line, d>
//   weights                  | freqs
//   <k values on one line>   | <d values on one line>
//   cond_probs               |
//   <d lines of k values>    |

namespace {

void write_vector(std::ofstream& out, const double* v, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) {
        if (i) out << ' ';
        out << fmt17(v[i]);
    }
    out << '\n';
}

std::string expect_line(std::istream& in, const std::string& what) {
    std::string line;
    if (!std::getline(in, line)) throw InputError("model file truncated at " + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

void expect_keyword(std::istream& in, const std::string& kw) {
    if (expect_line(in, kw) != kw)
        throw InputError("model file: expected '" + kw + "' line");
}

std::int64_t parse_count(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string k;
    std::int64_t v = 0;
    if (!(ss >> k >> v) || k != key || v < 1)
        throw InputError("model file: bad '" + key + "' line");
    return v;
}

std::vector<double> parse_values(const std::string& line, std::int64_t n,
                                 const std::string& what) {
    std::istringstream ss(line);
    std::vector<double> vals(n);
    for (std::int64_t i = 0; i < n; ++i)
        if (!(ss >> vals[i]))
            throw InputError("model file: short " + what + " line");
    double extra;
    if (ss >> extra) throw InputError("model file: overlong " + what + " line");
    return vals;
}

}  // namespace

void save_model(const NaiveBayesModel& model, const std::string& path) {
    model.validate();
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << "nbm 1 mixture\n";
    out << "k " << model.k() << "\n";
    out << "d " << model.d() << "\n";
    out << "features\n";
    for (const auto& n : model.feature_names) out << n << '\n';
    out << "weights\n";
    write_vector(out, model.weights.data(), model.k());
    out << "cond_probs\n";
    for (std::int64_t i = 0; i < model.d(); ++i) {
        Eigen::VectorXd row = model.cond_probs.row(i);
        write_vector(out, row.data(), model.k());
    }
    if (!out) throw InputError("write failed: " + path);
}

void save_model(const BaselineModel& model, const std::string& path) {
    model.validate();
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << "nbm 1 baseline\n";
    out << "d " << model.d() << "\n";
    out << "features\n";
    for (const auto& n : model.feature_names) out << n << '\n';
    out << "freqs\n";
    write_vector(out, model.freqs.data(), model.d());
    if (!out) throw InputError("write failed: " + path);
}

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    const std::string header = expect_line(in, "header");
    std::istringstream hs(header);
    std::string magic, kind;
    int version = 0;
    if (!(hs >> magic >> version >> kind) || magic != "nbm")
        throw InputError("not a model file: " + path);
    if (version != 1)
        throw InputError("unsupported model file version " + std::to_string(version));

    if (kind == "mixture") {
        const std::int64_t k = parse_count(expect_line(in, "k"), "k");
        const std::int64_t d = parse_count(expect_line(in, "d"), "d");
        expect_keyword(in, "features");
        NaiveBayesModel model;
        model.feature_names.reserve(d);
        for (std::int64_t i = 0; i < d; ++i)
            model.feature_names.push_back(expect_line(in, "feature name"));
        expect_keyword(in, "weights");
        auto w = parse_values(expect_line(in, "weights"), k, "weights");
        model.weights = Eigen::Map<Eigen::VectorXd>(w.data(), k);
        expect_keyword(in, "cond_probs");
        model.cond_probs.resize(d, k);
        for (std::int64_t i = 0; i < d; ++i) {
            auto row = parse_values(expect_line(in, "cond_probs row"), k, "cond_probs");
            for (std::int64_t j = 0; j < k; ++j) model.cond_probs(i, j) = row[j];
        }
        model.validate();
        return model;
    }
    if (kind == "baseline") {
        const std::int64_t d = parse_count(expect_line(in, "d"), "d");
        expect_keyword(in, "features");
        BaselineModel model;
        model.feature_names.reserve(d);
        for (std::int64_t i = 0; i < d; ++i)
            model.feature_names.push_back(expect_line(in, "feature name"));
        expect_keyword(in, "freqs");
        auto f = parse_values(expect_line(in, "freqs"), d, "freqs");
        model.freqs = Eigen::Map<Eigen::VectorXd>(f.data(), d);
        model.validate();
        return model;
    }
    throw InputError("unknown model kind '" + kind + "' in " + path);
}

}  // namespace tensorgen
