#pragma once

#include <array>

#include <Eigen/Dense>

#include "sgshell/jet.hpp"

namespace sgshell {

// Small helpers that keep jet expressions free of Eigen's reduction
// machinery, which wants conj()/abs2() on the scalar.

template <class T>
T dot(const Eigen::Matrix<T, 3, 1>& a, const Eigen::Matrix<T, 3, 1>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Eigen::Matrix<T, 3, 1> cross(const Eigen::Matrix<T, 3, 1>& a, const Eigen::Matrix<T, 3, 1>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Full contraction A^{αβ} M_{αβ}.
template <class T>
T contract(const Eigen::Matrix<T, 2, 2>& a, const Eigen::Matrix<T, 2, 2>& m) {
  return a(0, 0) * m(0, 0) + a(0, 1) * m(0, 1) + a(1, 0) * m(1, 0) + a(1, 1) * m(1, 1);
}

/// Raise both indices: A^{αγ} M_{γδ} A^{δβ}.
template <class T>
Eigen::Matrix<T, 2, 2> raise(const Eigen::Matrix<T, 2, 2>& dual, const Eigen::Matrix<T, 2, 2>& m) {
  Eigen::Matrix<T, 2, 2> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      T s = T(0.0);
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) s += dual(a, c) * m(c, d) * dual(d, b);
      out(a, b) = s;
    }
  return out;
}

/// 3×3×3 arrays indexed [i][j][k].
using Tensor3 = std::array<std::array<std::array<double, 3>, 3>, 3>;

inline Tensor3 zero_tensor3() {
  Tensor3 t{};
  return t;
}

}  // namespace sgshell
