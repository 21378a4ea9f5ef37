#pragma once

// Reads polynomials written as in Polynomial::to_string, e.g.
// "3/2*x1^2*x2 - x3 + 7", with parentheses and integer powers allowed.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "detloci/error.hpp"
#include "detloci/polynomial.hpp"

namespace detloci {

namespace detail {

template <ScalarField K>
class PolyParser {
 public:
  PolyParser(const RingPtr<K>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<K> run() {
    auto p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial<K> expression() {
    skip();
    Polynomial<K> acc(ring_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> term() {
    auto acc = power();
    while (true) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        skip();
        auto den = K::parse(ring_->scalars, digits());
        if (den.is_zero()) fail("division by zero");
        acc = acc * den.inverse();
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> power() {
    auto base = atom();
    skip();
    if (peek('^')) {
      ++pos_;
      skip();
      auto e = digits();
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial<K> atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expression();
      skip();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial<K>::constant(ring_, K::parse(ring_->scalars, digits()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (ring_->vars[i] == name) return Polynomial<K>::variable(ring_, i);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                     what);
  }

  const RingPtr<K>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <ScalarField K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text) {
  return detail::PolyParser<K>(ring, text).run();
}

}  // namespace detloci
