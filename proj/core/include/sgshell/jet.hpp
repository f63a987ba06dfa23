#pragma once

#include <array>
#include <cmath>

#include <Eigen/Core>

namespace sgshell {

/// Truncated Taylor polynomial in the two chart parameters.
///
/// A Jet of order p stores the coefficients c(i, j) of dθ¹^i dθ²^j for all
/// i + j <= p, expanded about a fixed parameter point. Arithmetic truncates at
/// the smaller operand order, so every derived field carries exactly the
/// derivative information that its inputs determine. Differentiating lowers
/// the order by one; a plain double converts to a constant that is exact to
/// every order.
class Jet {
 public:
  static constexpr int kMaxOrder = 5;
  static constexpr int kSize = (kMaxOrder + 1) * (kMaxOrder + 2) / 2;

  Jet() : Jet(0.0) {}
  Jet(double v) : order_(kMaxOrder) { c_[0] = v; }  // NOLINT: implicit by design of Eigen scalars

  /// The coordinate function θ^k expanded about θ^k = value.
  static Jet variable(int k, double value, int order);
  static Jet constant(double value, int order);

  int order() const { return order_; }
  double value() const { return c_[0]; }

  double coeff(int i, int j) const { return c_[index(i, j)]; }
  double& coeff(int i, int j) { return c_[index(i, j)]; }

  /// ∂₁^i ∂₂^j at the expansion point.
  double partial(int i, int j) const;

  /// ∂/∂θ^k; throws InsufficientSmoothness on an order-0 jet.
  Jet derivative(int k) const;
  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator*=(double s);
  Jet& operator/=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, double s) { return a /= s; }
  friend Jet operator+(Jet a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend Jet operator+(double s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, double s) {
    a.c_[0] -= s;
    return a;
  }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  Jet operator-() const;
  Jet operator+() const { return *this; }

  static constexpr int index(int i, int j) {
    const int d = i + j;
    return d * (d + 1) / 2 + j;
  }
  static constexpr int size_for(int order) { return (order + 1) * (order + 2) / 2; }

 private:
  friend Jet compose(const Jet& g, const double* taylor);

  int order_;
  std::array<double, kSize> c_{};
};

/// f(g) given taylor[k] = f^(k)(g.value()) / k! for k = 0..g.order().
Jet compose(const Jet& g, const double* taylor);

Jet sqrt(const Jet& x);
Jet pow(const Jet& x, double p);
Jet sin(const Jet& x);
Jet cos(const Jet& x);
Jet exp(const Jet& x);
Jet log(const Jet& x);

using Vec3J = Eigen::Matrix<Jet, 3, 1>;
using Mat2J = Eigen::Matrix<Jet, 2, 2>;
using Mat3J = Eigen::Matrix<Jet, 3, 3>;

Eigen::Vector3d values(const Vec3J& v);
Eigen::Matrix2d values(const Mat2J& m);
Eigen::Matrix3d values(const Mat3J& m);
Vec3J derivative(const Vec3J& v, int k);
Mat2J derivative(const Mat2J& m, int k);
Mat3J derivative(const Mat3J& m, int k);
int min_order(const Vec3J& v);

/// Lift a double-valued vector to constant jets of the given order.
Vec3J lift(const Eigen::Vector3d& v, int order = Jet::kMaxOrder);

}  // namespace sgshell

namespace Eigen {

template <>
struct NumTraits<sgshell::Jet> : GenericNumTraits<sgshell::Jet> {
  using Real = sgshell::Jet;
  using NonInteger = sgshell::Jet;
  using Nested = sgshell::Jet;
  using Literal = sgshell::Jet;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(std::numeric_limits<double>::epsilon()); }
  static inline Real dummy_precision() { return Real(1e-12); }
  static inline int digits10() { return NumTraits<double>::digits10(); }
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<sgshell::Jet, double, BinaryOp> {
  using ReturnType = sgshell::Jet;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<double, sgshell::Jet, BinaryOp> {
  using ReturnType = sgshell::Jet;
};

}  // namespace Eigen
