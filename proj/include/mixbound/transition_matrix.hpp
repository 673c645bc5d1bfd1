#ifndef MIXBOUND_TRANSITION_MATRIX_HPP
#define MIXBOUND_TRANSITION_MATRIX_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "mixbound/config.hpp"
#include "mixbound/errors.hpp"

namespace mixbound {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

/// A validated row-stochastic matrix over a labeled finite state space.
/// Immutable after construction; share freely across threads.
class TransitionMatrix {
public:
    /// Validates and adopts a raw matrix. Entries in [-entry_clamp, 0) are
    /// clamped to 0; anything more negative is an error, as is a row sum
    /// off by more than tol.row_sum.
    static TransitionMatrix validate(Matrix raw,
                                     std::vector<std::string> labels = {},
                                     const Tolerances& tol = default_tolerances()) {
        if (raw.rows() != raw.cols() || raw.rows() < 1)
            throw NonSquare(raw.rows(), raw.cols());
        const long n = raw.rows();
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                double v = raw(i, j);
                if (v < 0) {
                    if (v < -tol.entry_clamp) throw NegativeEntry(i, j, v);
                    raw(i, j) = 0.0;
                }
            }
            double dev = raw.row(i).sum() - 1.0;
            if (std::abs(dev) > tol.row_sum) throw RowSumViolation(i, dev);
        }
        if (labels.empty()) {
            labels.reserve(n);
            for (long i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        } else if (static_cast<long>(labels.size()) != n) {
            throw DimensionMismatch();
        }
        return TransitionMatrix(std::move(raw), std::move(labels));
    }

    long size() const { return entries_.rows(); }
    const Matrix& entries() const { return entries_; }
    const std::vector<std::string>& labels() const { return labels_; }
    double operator()(long i, long j) const { return entries_(i, j); }

private:
    TransitionMatrix(Matrix m, std::vector<std::string> labels)
        : entries_(std::move(m)), labels_(std::move(labels)) {}

    Matrix entries_;
    std::vector<std::string> labels_;
};

} // namespace mixbound

#endif
