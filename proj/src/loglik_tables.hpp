#pragma once

// Shared between log_likelihood and the EM E-step. Not installed.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>

#include "tensorgen/model.hpp"

namespace tensorgen::detail {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Per-component row scores log(w_j) + sum_i [x ? log P : log(1-P)].
// When no probability sits exactly on {0,1} the sparse path applies:
// score_j = base_j + sum over set features of logit_ij. Boundary models
// fall back to the dense branchy path so 0 * log(0) never produces NaN.
struct ComponentLogTables {
    Eigen::VectorXd base;   // k: log w_j + sum_i log(1 - P_ij)
    Eigen::MatrixXd logit;  // d x k: log P_ij - log(1 - P_ij)
    const NaiveBayesModel* model = nullptr;
    bool boundary = false;

    static ComponentLogTables build(const NaiveBayesModel& m) {
        ComponentLogTables t;
        t.model = &m;
        const auto& P = m.cond_probs;
        t.boundary = (P.array() <= 0.0).any() || (P.array() >= 1.0).any();
        if (!t.boundary) {
            t.base = m.weights.array().log().matrix();
            t.logit.resize(P.rows(), P.cols());
            for (std::int64_t j = 0; j < P.cols(); ++j) {
                double acc = t.base[j];
                for (std::int64_t i = 0; i < P.rows(); ++i) {
                    const double p = P(i, j);
                    acc += std::log1p(-p);
                    t.logit(i, j) = std::log(p) - std::log1p(-p);
                }
                t.base[j] = acc;
            }
        }
        return t;
    }

    void row_scores(const std::uint8_t* row, double* out) const {
        const auto& P = model->cond_probs;
        const std::int64_t k = model->k(), d = model->d();
        if (!boundary) {
            for (std::int64_t j = 0; j < k; ++j) out[j] = base[j];
            for (std::int64_t i = 0; i < d; ++i)
                if (row[i])
                    for (std::int64_t j = 0; j < k; ++j) out[j] += logit(i, j);
            return;
        }
        for (std::int64_t j = 0; j < k; ++j) {
            double s = model->weights[j] > 0.0 ? std::log(model->weights[j]) : kNegInf;
            for (std::int64_t i = 0; i < d && s != kNegInf; ++i) {
                const double p = P(i, j);
                if (row[i])
                    s += p > 0.0 ? std::log(p) : kNegInf;
                else
                    s += p < 1.0 ? std::log1p(-p) : kNegInf;
            }
            out[j] = s;
        }
    }
};

inline double log_sum_exp(const double* s, std::int64_t k) {
    double m = kNegInf;
    for (std::int64_t j = 0; j < k; ++j)
        if (s[j] > m) m = s[j];
    if (m == kNegInf) return kNegInf;
    double acc = 0.0;
    for (std::int64_t j = 0; j < k; ++j) acc += std::exp(s[j] - m);
    return m + std::log(acc);
}

}  // namespace tensorgen::detail
