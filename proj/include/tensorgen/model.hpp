#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tensorgen/dataset.hpp"

namespace tensorgen {

/// Mixture of product-Bernoulli components: a latent state j is drawn with
/// probability weights[j], then feature i fires with probability
/// cond_probs(i, j) independently of the other features.
struct NaiveBayesModel {
    Eigen::VectorXd weights;     // k, nonnegative, sums to 1 within 1e-9
    Eigen::MatrixXd cond_probs;  // d x k, entries in [0,1]
    std::vector<std::string> feature_names;  // d

    std::int64_t k() const { return weights.size(); }
    std::int64_t d() const { return cond_probs.rows(); }
    void validate() const;
};

/// Independent per-feature Bernoulli at the empirical marginal frequency.
struct BaselineModel {
    Eigen::VectorXd freqs;  // d, entries in [0,1]
    std::vector<std::string> feature_names;

    std::int64_t d() const { return freqs.size(); }
    void validate() const;
};

/// Draws m rows. Row r uses substream(seed, r): first the latent state
/// (one uniform against the cumulative weights), then one uniform per
/// feature in index order. Bit-identical for identical (model, m, seed).
BinaryDataset sample(const NaiveBayesModel& model, std::int64_t m, std::uint64_t seed);

BinaryDataset sample_baseline(const BaselineModel& model, std::int64_t m,
                              std::uint64_t seed);

BaselineModel fit_baseline(const BinaryDataset& data);

/// Sum over rows of log sum_j w_j prod_i P(i,j)^x (1-P(i,j))^(1-x), in the
/// log domain. Boundary probabilities (exactly 0 or 1) are legal and can
/// make the result -infinity.
double log_likelihood(const NaiveBayesModel& model, const BinaryDataset& data);

/// Versioned text format, full round trip at 17 significant digits.
void save_model(const NaiveBayesModel& model, const std::string& path);
void save_model(const BaselineModel& model, const std::string& path);
using LoadedModel = std::variant<NaiveBayesModel, BaselineModel>;
LoadedModel load_model(const std::string& path);

}  // namespace tensorgen
