#include "segre/scalar.hpp"

#include "segre/error.hpp"
#include "segre/polynomial.hpp"

namespace segre {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Input: return "INPUT_ERROR";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::UnsupportedInput: return "UNSUPPORTED_INPUT";
    case ErrorCode::UnsupportedTerm: return "UNSUPPORTED_TERM";
    case ErrorCode::Undecided: return "UNDECIDED";
    case ErrorCode::NumericalFailure: return "NUMERICAL_FAILURE";
    case ErrorCode::ContourTooClose: return "CONTOUR_TOO_CLOSE";
    case ErrorCode::Nondeterministic: return "NONDETERMINISTIC";
  }
  return "UNKNOWN";
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::Input:
    case ErrorCode::Parse: return 2;
    case ErrorCode::UnsupportedInput:
    case ErrorCode::UnsupportedTerm: return 3;
    default: return 4;
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::Input, "division by zero scalar");
  Rational d = o.norm2();
  Rational r = (re_ * o.re_ + im_ * o.im_) / d;
  Rational i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = r;
  im_ = i;
  re_.canonicalize();
  im_.canonicalize();
  return *this;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::Input, "empty rational");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (size_t k = start; k < s.size(); ++k) {
    char c = s[k];
    if (c == '/') {
      if (seen_slash || !digit_before) throw Error(ErrorCode::Input, "bad rational '" + s + "'");
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw Error(ErrorCode::Input, "bad rational '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw Error(ErrorCode::Input, "bad rational '" + s + "'");
  std::string body = s.substr(s[0] == '+' ? 1 : 0);
  Rational q;
  q.set_str(body, 10);
  if (q.get_den() == 0) throw Error(ErrorCode::Input, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Scalar parse_scalar(const std::string& s) {
  // A scalar is a constant polynomial in zero variables.
  Polynomial p = parse_polynomial(s, {});
  return p.constant_term();
}

std::string Scalar::str() const {
  if (im_ == 0) return rational_str(re_);
  std::string out;
  if (re_ != 0) out = rational_str(re_);
  Rational a = abs(im_);
  std::string imag = (a == 1) ? "i" : rational_str(a) + "*i";
  if (im_ < 0) out += "-";
  else if (!out.empty()) out += "+";
  return out + imag;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

}  // namespace segre
