#include "field_parser.hpp"

#include <cctype>

namespace folia::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  PolyVectorField field() {
    PolyVectorField out;
    sum([&](const Gauss& c, const Exponent& e) {
      char d = derivation();
      (d == 'x' ? out.p : out.q) += BiPoly::monomial(e.first, e.second, c);
    });
    if (out.is_zero()) fail_at(1, 1, "zero vector field");
    return out;
  }

  BiPoly polynomial() {
    BiPoly out;
    sum([&](const Gauss& c, const Exponent& e) { out += BiPoly::monomial(e.first, e.second, c); });
    return out;
  }

 private:
  template <class Emit>
  void sum(Emit emit) {
    skip();
    if (at_end()) fail("empty input");
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = take() == '-';
    while (true) {
      auto [c, e] = term();
      emit(neg ? -c : c, e);
      skip();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("expected '+' or '-', found '") + peek() + "'");
      neg = take() == '-';
    }
  }

  std::pair<Gauss, Exponent> term() {
    skip();
    Gauss c(1);
    Exponent e{0, 0};
    bool any = false;
    if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(')) {
      c = coefficient();
      any = true;
    }
    while (true) {
      skip();
      if (any && !at_end() && peek() == '*') {
        take();
        skip();
        if (at_end() || (peek() != 'x' && peek() != 'y')) fail("expected a variable after '*'");
      }
      if (at_end() || (peek() != 'x' && peek() != 'y')) break;
      char v = take();
      int k = 1;
      skip();
      if (!at_end() && peek() == '^') {
        take();
        skip();
        k = natural();
      }
      (v == 'x' ? e.first : e.second) += k;
      any = true;
    }
    if (!any && (at_end() || peek() != 'D')) fail("expected a term");
    return {c, e};
  }

  char derivation() {
    skip();
    if (at_end() || peek() != 'D') fail("expected 'Dx' or 'Dy'");
    take();
    if (at_end() || (peek() != 'x' && peek() != 'y')) fail("expected 'x' or 'y' after 'D'");
    return take();
  }

  Gauss coefficient() {
    if (peek() != '(') return Gauss(rational());
    take();
    Rat re(0), im(0);
    bool have_re = false, have_im = false;
    skip();
    while (!at_end() && peek() != ')') {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = take() == '-';
        skip();
      } else if (have_re || have_im) {
        fail("expected '+' or '-' inside a complex literal");
      }
      Rat v(1);
      bool num = !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
      if (num) v = rational();
      skip();
      if (!at_end() && peek() == 'i') {
        take();
        if (have_im) fail("two imaginary parts");
        have_im = true;
        im = neg ? Rat(-v) : v;
      } else {
        if (!num) fail("expected a number");
        if (have_re) fail("two real parts");
        have_re = true;
        re = neg ? Rat(-v) : v;
      }
      skip();
    }
    if (at_end()) fail("unterminated complex literal");
    if (!have_re && !have_im) fail("empty parentheses");
    take();
    return Gauss(re, im);
  }

  Rat rational() {
    Int num(digits());
    skip();
    if (!at_end() && peek() == '/') {
      take();
      skip();
      int l = line_, c = col_;
      Int den(digits());
      if (den == 0) fail_at(l, c, "zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  int natural() {
    int l = line_, c = col_;
    std::string d = digits();
    if (d.size() > 6) fail_at(l, c, "exponent too large");
    return std::stoi(d);
  }

  std::string digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += take();
    return d;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) take();
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char take() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& what) { fail_at(line_, col_, what); }
  [[noreturn]] static void fail_at(int line, int col, const std::string& what) { throw ParseError(what, line, col); }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

PolyVectorField parse_field(const std::string& text) { return Parser(text).field(); }

BiPoly parse_polynomial(const std::string& text) { return Parser(text).polynomial(); }

}  // namespace folia::cli
