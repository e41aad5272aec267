// Copyright 2026 The Supergeom Authors
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

#ifndef SUPERGEOM_SCALAR_HPP_
#define SUPERGEOM_SCALAR_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace supergeom {

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar Rational(long num, long den) { return Scalar(mpq_class(num, den)); }
  static Scalar I() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (is_real()) return Scalar(mpq_class(1) / re_);
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
  }

  // DSL spelling: "3", "-1/2", "2*i", "(1/2 + 3*i)". Parseable by the DSL.
  std::string to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag = ImagPart(im_);
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + re_.get_str();
    if (sgn(im_) < 0) {
      out += " - " + ImagPart(-im_);
    } else {
      out += " + " + imag;
    }
    return out + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  static std::string ImagPart(const mpq_class& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
  }

  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace supergeom

#endif  // SUPERGEOM_SCALAR_HPP_
