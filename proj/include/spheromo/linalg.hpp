#pragma once

#include "spheromo/core.hpp"

#include <optional>

namespace spheromo {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMat& m, std::size_t cols);

std::size_t rank(const QMat& m, std::size_t cols);

// Basis of {x : m x = 0} in Q^cols.
QMat nullspace(const QMat& m, std::size_t cols);

// Some x with m x = b, if one exists.
std::optional<QVec> solve(const QMat& m, const QVec& b, std::size_t cols);

Rational determinant(QMat m);

// Dimension of the affine hull of a nonempty point set.
std::size_t affine_rank(const std::vector<QVec>& points);

QMat transpose(const QMat& m, std::size_t cols);

}  // namespace spheromo
