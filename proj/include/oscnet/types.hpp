#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace oscnet {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using MaskMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// A binary pattern: every entry is exactly +1 or -1.
using Pattern = Eigen::VectorXi;

using PatternSet = std::vector<Pattern>;

/// Wraps an angle to the canonical interval [-pi, pi).
template <typename Scalar>
Scalar wrap_angle(Scalar x) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    constexpr Scalar two_pi = Scalar(2) * pi;
    Scalar y = std::fmod(x + pi, two_pi);
    if (y < Scalar(0)) {
        y += two_pi;
    }
    return y - pi;
}

}  // namespace oscnet
