#include "sgshell/jet.hpp"

#include <algorithm>

#include "sgshell/errors.hpp"

namespace sgshell {

namespace {

constexpr std::array<double, Jet::kMaxOrder + 1> factorials() {
  std::array<double, Jet::kMaxOrder + 1> f{};
  f[0] = 1.0;
  for (int k = 1; k <= Jet::kMaxOrder; ++k) f[k] = f[k - 1] * k;
  return f;
}
constexpr auto kFactorial = factorials();

}  // namespace

Jet Jet::variable(int k, double value, int order) {
  Jet j = constant(value, order);
  if (order >= 1) j.c_[k == 0 ? index(1, 0) : index(0, 1)] = 1.0;
  return j;
}

Jet Jet::constant(double value, int order) {
  Jet j(value);
  j.order_ = std::clamp(order, 0, kMaxOrder);
  return j;
}

double Jet::partial(int i, int j) const {
  if (i + j > order_) {
    throw Error(ErrorKind::InsufficientSmoothness, "requested partial beyond jet order");
  }
  return c_[index(i, j)] * kFactorial[i] * kFactorial[j];
}

Jet Jet::derivative(int k) const {
  if (order_ == 0) {
    throw Error(ErrorKind::InsufficientSmoothness, "differentiating an order-0 jet");
  }
  Jet out = constant(0.0, order_ - 1);
  for (int d = 0; d < order_; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      out.c_[index(i, j)] = (k == 0) ? (i + 1) * c_[index(i + 1, j)] : (j + 1) * c_[index(i, j + 1)];
    }
  }
  return out;
}

Jet Jet::truncated(int order) const {
  Jet out = *this;
  out.order_ = std::min(order_, std::max(order, 0));
  std::fill(out.c_.begin() + size_for(out.order_), out.c_.end(), 0.0);
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  const int n = size_for(order_);
  for (int k = 0; k < n; ++k) c_[k] += o.c_[k];
  std::fill(c_.begin() + n, c_.end(), 0.0);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  const int n = size_for(order_);
  for (int k = 0; k < n; ++k) c_[k] -= o.c_[k];
  std::fill(c_.begin() + n, c_.end(), 0.0);
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator*=(double s) {
  for (double& c : c_) c *= s;
  return *this;
}

Jet& Jet::operator/=(double s) {
  for (double& c : c_) c /= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (double& c : out.c_) c = -c;
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  const int p = std::min(a.order_, b.order_);
  Jet out = Jet::constant(0.0, p);
  // Products of a constant with anything reduce to scaling.
  bool a_const = true, b_const = true;
  for (int k = 1; k < Jet::size_for(p); ++k) {
    a_const = a_const && a.c_[k] == 0.0;
    b_const = b_const && b.c_[k] == 0.0;
  }
  if (a_const || b_const) {
    const Jet& v = a_const ? b : a;
    const double s = a_const ? a.c_[0] : b.c_[0];
    for (int k = 0; k < Jet::size_for(p); ++k) out.c_[k] = s * v.c_[k];
    return out;
  }
  for (int d1 = 0; d1 <= p; ++d1) {
    for (int j1 = 0; j1 <= d1; ++j1) {
      const double ca = a.c_[Jet::index(d1 - j1, j1)];
      if (ca == 0.0) continue;
      const int i1 = d1 - j1;
      for (int d2 = 0; d1 + d2 <= p; ++d2) {
        for (int j2 = 0; j2 <= d2; ++j2) {
          out.c_[Jet::index(i1 + d2 - j2, j1 + j2)] += ca * b.c_[Jet::index(d2 - j2, j2)];
        }
      }
    }
  }
  return out;
}

Jet operator/(const Jet& a, const Jet& b) { return a * pow(b, -1.0); }

Jet compose(const Jet& g, const double* taylor) {
  const int p = g.order_;
  Jet delta = g;
  delta.c_[0] = 0.0;
  Jet out = Jet::constant(taylor[p], p);
  for (int k = p - 1; k >= 0; --k) {
    out = out * delta;
    out.c_[0] += taylor[k];
  }
  return out;
}

Jet pow(const Jet& x, double p) {
  std::array<double, Jet::kMaxOrder + 1> t{};
  const double x0 = x.value();
  double binom = 1.0;
  for (int k = 0; k <= x.order(); ++k) {
    t[k] = binom * std::pow(x0, p - k);
    binom *= (p - k) / (k + 1);
  }
  return compose(x, t.data());
}

Jet sqrt(const Jet& x) { return pow(x, 0.5); }

Jet sin(const Jet& x) {
  std::array<double, Jet::kMaxOrder + 1> t{};
  const double s = std::sin(x.value()), c = std::cos(x.value());
  const double cycle[4] = {s, c, -s, -c};
  for (int k = 0; k <= x.order(); ++k) t[k] = cycle[k % 4] / kFactorial[k];
  return compose(x, t.data());
}

Jet cos(const Jet& x) {
  std::array<double, Jet::kMaxOrder + 1> t{};
  const double s = std::sin(x.value()), c = std::cos(x.value());
  const double cycle[4] = {c, -s, -c, s};
  for (int k = 0; k <= x.order(); ++k) t[k] = cycle[k % 4] / kFactorial[k];
  return compose(x, t.data());
}

Jet exp(const Jet& x) {
  std::array<double, Jet::kMaxOrder + 1> t{};
  const double e = std::exp(x.value());
  for (int k = 0; k <= x.order(); ++k) t[k] = e / kFactorial[k];
  return compose(x, t.data());
}

Jet log(const Jet& x) {
  std::array<double, Jet::kMaxOrder + 1> t{};
  const double x0 = x.value();
  t[0] = std::log(x0);
  for (int k = 1; k <= x.order(); ++k) t[k] = ((k % 2) ? 1.0 : -1.0) / (k * std::pow(x0, k));
  return compose(x, t.data());
}

Eigen::Vector3d values(const Vec3J& v) { return {v[0].value(), v[1].value(), v[2].value()}; }

Eigen::Matrix2d values(const Mat2J& m) {
  Eigen::Matrix2d out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = m(i, j).value();
  return out;
}

Eigen::Matrix3d values(const Mat3J& m) {
  Eigen::Matrix3d out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m(i, j).value();
  return out;
}

Vec3J derivative(const Vec3J& v, int k) { return {v[0].derivative(k), v[1].derivative(k), v[2].derivative(k)}; }

Mat2J derivative(const Mat2J& m, int k) {
  Mat2J out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = m(i, j).derivative(k);
  return out;
}

Mat3J derivative(const Mat3J& m, int k) {
  Mat3J out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m(i, j).derivative(k);
  return out;
}

int min_order(const Vec3J& v) { return std::min({v[0].order(), v[1].order(), v[2].order()}); }

Vec3J lift(const Eigen::Vector3d& v, int order) {
  return {Jet::constant(v[0], order), Jet::constant(v[1], order), Jet::constant(v[2], order)};
}

}  // namespace sgshell
