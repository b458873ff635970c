#pragma once

#include "dfsl/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>

namespace dfsl {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Uniform grid with integer endpoints; interior points are t = a+1 .. b-1.
// The step h only enters the delta (G-L) operators; nabla operators use unit
// steps.
struct GridSpec {
  std::int64_t a;
  std::int64_t b;
  Rational h;

  GridSpec(std::int64_t a_, std::int64_t b_, Rational h_ = Rational(1))
      : a(a_), b(b_), h(std::move(h_)) {
    if (b < a + 3) throw std::invalid_argument("grid requires b >= a + 3 (two interior points)");
    if (!(h > Rational(0))) throw std::domain_error("grid step h must be positive");
  }

  std::int64_t n() const { return b - a - 1; }
  // Interior point t for value index i (exact: integers fit a double here).
  double point(Eigen::Index i) const { return static_cast<double>(a + 1 + i); }

  friend bool operator==(const GridSpec& x, const GridSpec& y) {
    return x.a == y.a && x.b == y.b && x.h == y.h;
  }
  friend bool operator!=(const GridSpec& x, const GridSpec& y) { return !(x == y); }
};

template <class Scalar>
struct GridFunction {
  GridSpec grid;
  DenseVector<Scalar> values;

  GridFunction(GridSpec g, DenseVector<Scalar> v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != static_cast<Eigen::Index>(grid.n()))
      throw std::invalid_argument("grid function length must equal the interior size");
  }
};

template <class Scalar>
GridFunction<Scalar> constant_function(const GridSpec& grid, const Scalar& c) {
  return GridFunction<Scalar>(grid,
                              DenseVector<Scalar>::Constant(static_cast<Eigen::Index>(grid.n()), c));
}

}  // namespace dfsl
