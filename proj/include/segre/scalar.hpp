#pragma once
#include <gmpxx.h>

#include <complex>
#include <string>

namespace segre {

using Rational = mpq_class;
using cplx = std::complex<double>;

// Gaussian rational re + i*im, always canonical.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT(implicit)
  Scalar(const Rational& re) : re_(re), im_(0) { re_.canonicalize(); }  // NOLINT
  Scalar(const Rational& re, const Rational& im) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  cplx to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Plain text: "3/2", "-i", "1/2+3*i".
  std::string str() const;

 private:
  Rational re_, im_;
};

std::string rational_str(const Rational& q);
// Accepts "p", "-p", "p/q"; throws Error(Input) otherwise.
Rational parse_rational(const std::string& s);
// Accepts rational strings and Gaussian forms such as "1/2+3*i" or "-i".
Scalar parse_scalar(const std::string& s);

// Pairs of rationals are compared lexicographically for canonical ordering.
bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace segre
