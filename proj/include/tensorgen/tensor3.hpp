#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

namespace tensorgen {

/// Dense cubic tensor, row-major flat storage. Meant for symmetric use:
/// d x d x d third moments (d <= 128) and k x k x k whitened tensors.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::int64_t n) : n_(n) {
        v_.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    }

    std::int64_t dim() const { return n_; }

    double& operator()(std::int64_t i, std::int64_t j, std::int64_t l) {
        return v_[(static_cast<std::size_t>(i) * n_ + j) * n_ + l];
    }
    double operator()(std::int64_t i, std::int64_t j, std::int64_t l) const {
        return v_[(static_cast<std::size_t>(i) * n_ + j) * n_ + l];
    }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }

    /// Writes value at all six (i,j,l) index permutations.
    void set_sym(std::int64_t i, std::int64_t j, std::int64_t l, double value) {
        (*this)(i, j, l) = value;
        (*this)(i, l, j) = value;
        (*this)(j, i, l) = value;
        (*this)(j, l, i) = value;
        (*this)(l, i, j) = value;
        (*this)(l, j, i) = value;
    }

    void add_sym(std::int64_t i, std::int64_t j, std::int64_t l, double value) {
        set_sym(i, j, l, (*this)(i, j, l) + value);
    }

    /// w = T(., v, v)
    Eigen::VectorXd contract_vv(const Eigen::VectorXd& v) const {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
        // T(.,v,v)_i = v' * slice_i * v with slice_i = T[i,:,:]
        Eigen::Map<const Eigen::MatrixXd> flat(v_.data(), n_ * n_, n_);
        for (std::int64_t i = 0; i < n_; ++i) {
            Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                           Eigen::RowMajor>>
                slice(v_.data() + static_cast<std::size_t>(i) * n_ * n_, n_, n_);
            out[i] = v.dot(slice * v);
        }
        return out;
    }

    double apply_vvv(const Eigen::VectorXd& v) const { return v.dot(contract_vv(v)); }

    /// T -= lambda * v (x) v (x) v
    void subtract_rank_one(double lambda, const Eigen::VectorXd& v) {
        for (std::int64_t i = 0; i < n_; ++i)
            for (std::int64_t j = 0; j < n_; ++j) {
                const double s = lambda * v[i] * v[j];
                double* row = v_.data() + (static_cast<std::size_t>(i) * n_ + j) * n_;
                for (std::int64_t l = 0; l < n_; ++l) row[l] -= s * v[l];
            }
    }

    double max_abs_asymmetry() const {
        double worst = 0.0;
        for (std::int64_t i = 0; i < n_; ++i)
            for (std::int64_t j = i; j < n_; ++j)
                for (std::int64_t l = j; l < n_; ++l) {
                    const double a = (*this)(i, j, l);
                    const double perms[5] = {(*this)(i, l, j), (*this)(j, i, l),
                                             (*this)(j, l, i), (*this)(l, i, j),
                                             (*this)(l, j, i)};
                    for (double p : perms) worst = std::max(worst, std::abs(a - p));
                }
        return worst;
    }

    double max_abs_diff(const Tensor3& other) const {
        double worst = 0.0;
        for (std::size_t i = 0; i < v_.size(); ++i)
            worst = std::max(worst, std::abs(v_[i] - other.v_[i]));
        return worst;
    }

private:
    std::int64_t n_ = 0;
    std::vector<double> v_;
};

}  // namespace tensorgen
