#include "blockalg/parse.hpp"

#include <cctype>

namespace blockalg {

namespace {

class Parser {
 public:
  Parser(CtxPtr ctx, const std::string& text)
      : ctx_(std::move(ctx)), s_(text) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  CtxPtr ctx_;
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " +
                     msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    bool neg = false;
    for (;;) {
      if (eat('-'))
        neg = !neg;
      else if (eat('+'))
        ;
      else
        break;
    }
    Scalar v = atom();
    if (eat('^')) {
      long e = integer();
      Scalar p = Scalar::from_int(ctx_, 1);
      Scalar base = e < 0 ? v.inv() : v;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) p = p * base;
      v = p;
    }
    return neg ? -v : v;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        digits += s_[pos_];
        ++pos_;
      }
      return Scalar::from_rat(ctx_, Rat(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_')) {
        name += s_[pos_];
        ++pos_;
      }
      if (ctx_->has_extension() && name == ctx_->ext_name())
        return Scalar::theta(ctx_);
      if (!ctx_->has_var(name)) fail("unknown name '" + name + "'");
      return Scalar::variable(ctx_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Scalar parse_scalar(const CtxPtr& ctx, const std::string& text) {
  return Parser(ctx, text).run();
}

}  // namespace blockalg
