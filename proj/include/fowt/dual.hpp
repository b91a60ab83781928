// Copyright 2026 The fowt-ccd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Forward-mode automatic differentiation scalars with a fixed number of
// directions. Dual<N> carries first derivatives, Dual2<N> additionally the
// dense symmetric Hessian. Both are meant for small N (collocation-point
// local variables), where stack storage beats a tape.

#pragma once

#include <Eigen/Core>

#include <cmath>

namespace fowt {

template <int N>
struct Dual {
  double v = 0.0;
  Eigen::Matrix<double, N, 1> d = Eigen::Matrix<double, N, 1>::Zero();

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: implicit by design
  static Dual seed(double value, int k) {
    Dual out(value);
    out.d[k] = 1.0;
    return out;
  }

  Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }

  friend Dual operator+(const Dual& a, const Dual& b) {
    Dual r(a.v + b.v);
    r.d = a.d + b.d;
    return r;
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    Dual r(a.v - b.v);
    r.d = a.d - b.d;
    return r;
  }
  friend Dual operator-(const Dual& a) {
    Dual r(-a.v);
    r.d = -a.d;
    return r;
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.v * b.v);
    r.d = a.v * b.d + b.v * a.d;
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    Dual r(a.v / b.v);
    r.d = (a.d - r.v * b.d) / b.v;
    return r;
  }

  friend bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
  friend bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
  friend bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
  friend bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v; }
  friend bool operator!=(const Dual& a, const Dual& b) { return a.v != b.v; }
};

template <int N>
Dual<N> chain(const Dual<N>& x, double f, double df) {
  Dual<N> r(f);
  r.d = df * x.d;
  return r;
}

template <int N>
Dual<N> sin(const Dual<N>& x) {
  return chain(x, std::sin(x.v), std::cos(x.v));
}
template <int N>
Dual<N> cos(const Dual<N>& x) {
  return chain(x, std::cos(x.v), -std::sin(x.v));
}
template <int N>
Dual<N> tanh(const Dual<N>& x) {
  double t = std::tanh(x.v);
  return chain(x, t, 1.0 - t * t);
}
template <int N>
Dual<N> exp(const Dual<N>& x) {
  double e = std::exp(x.v);
  return chain(x, e, e);
}
template <int N>
Dual<N> log(const Dual<N>& x) {
  return chain(x, std::log(x.v), 1.0 / x.v);
}
template <int N>
Dual<N> sqrt(const Dual<N>& x) {
  double s = std::sqrt(x.v);
  return chain(x, s, 0.5 / s);
}
template <int N>
Dual<N> abs(const Dual<N>& x) {
  return x.v < 0.0 ? -x : x;
}
template <int N>
Dual<N> pow(const Dual<N>& x, double p) {
  return chain(x, std::pow(x.v, p), p * std::pow(x.v, p - 1.0));
}
template <int N>
Dual<N> atan(const Dual<N>& x) {
  return chain(x, std::atan(x.v), 1.0 / (1.0 + x.v * x.v));
}

// --------------------------------------------------------------------------
// Second-order dual: value, gradient and symmetric Hessian.

template <int N>
struct Dual2 {
  double v = 0.0;
  Eigen::Matrix<double, N, 1> d = Eigen::Matrix<double, N, 1>::Zero();
  Eigen::Matrix<double, N, N> h = Eigen::Matrix<double, N, N>::Zero();

  Dual2() = default;
  Dual2(double value) : v(value) {}  // NOLINT: implicit by design
  static Dual2 seed(double value, int k) {
    Dual2 out(value);
    out.d[k] = 1.0;
    return out;
  }

  Dual2& operator+=(const Dual2& o) {
    v += o.v;
    d += o.d;
    h += o.h;
    return *this;
  }
  Dual2& operator-=(const Dual2& o) {
    v -= o.v;
    d -= o.d;
    h -= o.h;
    return *this;
  }
  Dual2& operator*=(const Dual2& o) { return *this = *this * o; }
  Dual2& operator/=(const Dual2& o) { return *this = *this / o; }

  friend Dual2 operator+(const Dual2& a, const Dual2& b) {
    Dual2 r(a.v + b.v);
    r.d = a.d + b.d;
    r.h = a.h + b.h;
    return r;
  }
  friend Dual2 operator-(const Dual2& a, const Dual2& b) {
    Dual2 r(a.v - b.v);
    r.d = a.d - b.d;
    r.h = a.h - b.h;
    return r;
  }
  friend Dual2 operator-(const Dual2& a) {
    Dual2 r(-a.v);
    r.d = -a.d;
    r.h = -a.h;
    return r;
  }
  friend Dual2 operator*(const Dual2& a, const Dual2& b) {
    Dual2 r(a.v * b.v);
    r.d = a.v * b.d + b.v * a.d;
    r.h = a.v * b.h + b.v * a.h + a.d * b.d.transpose() + b.d * a.d.transpose();
    return r;
  }
  friend Dual2 operator/(const Dual2& a, const Dual2& b) {
    return a * inv(b);
  }

  friend bool operator<(const Dual2& a, const Dual2& b) { return a.v < b.v; }
  friend bool operator>(const Dual2& a, const Dual2& b) { return a.v > b.v; }
  friend bool operator<=(const Dual2& a, const Dual2& b) { return a.v <= b.v; }
  friend bool operator>=(const Dual2& a, const Dual2& b) { return a.v >= b.v; }
  friend bool operator==(const Dual2& a, const Dual2& b) { return a.v == b.v; }
  friend bool operator!=(const Dual2& a, const Dual2& b) { return a.v != b.v; }
};

template <int N>
Dual2<N> chain2(const Dual2<N>& x, double f, double df, double d2f) {
  Dual2<N> r(f);
  r.d = df * x.d;
  r.h = df * x.h + d2f * (x.d * x.d.transpose());
  return r;
}

template <int N>
Dual2<N> inv(const Dual2<N>& x) {
  double i = 1.0 / x.v;
  return chain2(x, i, -i * i, 2.0 * i * i * i);
}
template <int N>
Dual2<N> sin(const Dual2<N>& x) {
  double s = std::sin(x.v), c = std::cos(x.v);
  return chain2(x, s, c, -s);
}
template <int N>
Dual2<N> cos(const Dual2<N>& x) {
  double s = std::sin(x.v), c = std::cos(x.v);
  return chain2(x, c, -s, -c);
}
template <int N>
Dual2<N> tanh(const Dual2<N>& x) {
  double t = std::tanh(x.v), s = 1.0 - t * t;
  return chain2(x, t, s, -2.0 * t * s);
}
template <int N>
Dual2<N> exp(const Dual2<N>& x) {
  double e = std::exp(x.v);
  return chain2(x, e, e, e);
}
template <int N>
Dual2<N> log(const Dual2<N>& x) {
  return chain2(x, std::log(x.v), 1.0 / x.v, -1.0 / (x.v * x.v));
}
template <int N>
Dual2<N> sqrt(const Dual2<N>& x) {
  double s = std::sqrt(x.v);
  return chain2(x, s, 0.5 / s, -0.25 / (s * x.v));
}
template <int N>
Dual2<N> abs(const Dual2<N>& x) {
  return x.v < 0.0 ? -x : x;
}
template <int N>
Dual2<N> pow(const Dual2<N>& x, double p) {
  return chain2(x, std::pow(x.v, p), p * std::pow(x.v, p - 1.0),
                p * (p - 1.0) * std::pow(x.v, p - 2.0));
}
template <int N>
Dual2<N> atan(const Dual2<N>& x) {
  double q = 1.0 + x.v * x.v;
  return chain2(x, std::atan(x.v), 1.0 / q, -2.0 * x.v / (q * q));
}

// Value extraction usable from scalar-generic code; the double overload
// lives in types.hpp.
template <int N>
double val(const Dual<N>& x) {
  return x.v;
}
template <int N>
double val(const Dual2<N>& x) {
  return x.v;
}

template <typename T>
T smax(const T& a, const T& b) {
  return a.v >= val(b) ? a : b;
}

}  // namespace fowt

namespace Eigen {

template <int N>
struct NumTraits<fowt::Dual<N>> : NumTraits<double> {
  using Real = fowt::Dual<N>;
  using NonInteger = fowt::Dual<N>;
  using Nested = fowt::Dual<N>;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1 + N,
    AddCost = 1 + N,
    MulCost = 2 * (1 + N),
  };
};

template <int N>
struct NumTraits<fowt::Dual2<N>> : NumTraits<double> {
  using Real = fowt::Dual2<N>;
  using NonInteger = fowt::Dual2<N>;
  using Nested = fowt::Dual2<N>;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1 + N + N * N,
    AddCost = 1 + N + N * N,
    MulCost = 4 * (1 + N + N * N),
  };
};

}  // namespace Eigen
