#include <cctype>

#include "segre/error.hpp"
#include "segre/polynomial.hpp"

namespace segre {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& names)
      : s_(text), names_(names), n_(static_cast<int>(names.size())) {}

  Polynomial run() {
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    Polynomial p = sum();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial sum() {
    Polynomial acc(n_);
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = product();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Polynomial power_suffix(Polynomial base) {
    if (peek('^')) {
      ++pos_;
      long e = integer();
      if (e > 64) fail("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return power_suffix(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        std::string den = s_.substr(ds, pos_ - ds);
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += "/" + den;
      }
      Rational q;
      q.set_str(num, 10);
      q.canonicalize();
      return power_suffix(Polynomial::constant(n_, Scalar(q)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      for (int k = 0; k < n_; ++k)
        if (names_[k] == id) return power_suffix(Polynomial::variable(n_, k));
      if (id == "i") return power_suffix(Polynomial::constant(n_, Scalar::i()));
      pos_ = start;
      fail("unknown variable '" + id + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).run();
}

}  // namespace segre
