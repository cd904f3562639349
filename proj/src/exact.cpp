#include "folia/exact.hpp"

#include <sstream>

namespace folia {

std::string to_string(const Rat& r) { return r.get_str(); }

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Int& num = r.get_num();
  const Int& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Int sn = sqrt(num);
  Int sd = sqrt(den);
  Rat out(sn, sd);
  out.canonicalize();
  return out;
}

Gauss Gauss::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(i)");
  Rat n = norm();
  return Gauss(re_ / n, -im_ / n);
}

Gauss& Gauss::operator+=(const Gauss& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rat r = re_ * o.re_ - im_ * o.im_;
  Rat i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gauss& Gauss::operator/=(const Gauss& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Gauss pow(const Gauss& base, unsigned exp) {
  Gauss result(1);
  Gauss b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    b *= b;
    exp >>= 1U;
  }
  return result;
}

std::optional<Gauss> gauss_sqrt(const Gauss& z) {
  if (z.is_zero()) return Gauss(0);
  auto modulus = rat_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto a = rat_sqrt((*modulus + z.re()) / 2);
  auto b = rat_sqrt((*modulus - z.re()) / 2);
  if (!a || !b) return std::nullopt;
  Rat im = sgn(z.im()) < 0 ? Rat(-*b) : *b;
  Gauss root(*a, im);
  if (root * root != z) return std::nullopt;
  return root;
}

std::string to_string(const Gauss& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im;
  if (z.im() == 1) {
    im = "i";
  } else if (z.im() == -1) {
    im = "-i";
  } else {
    im = to_string(z.im()) + "i";
  }
  if (sgn(z.re()) == 0) return "(" + im + ")";
  std::string sep = sgn(z.im()) > 0 ? "+" : "";
  return "(" + to_string(z.re()) + sep + im + ")";
}

std::ostream& operator<<(std::ostream& os, const Gauss& z) { return os << to_string(z); }

namespace {

Rat parse_rat(const std::string& s) {
  if (s.empty() || s == "+") return Rat(1);
  if (s == "-") return Rat(-1);
  std::string t = s[0] == '+' ? s.substr(1) : s;
  Rat r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace

Gauss parse_gauss(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty Gaussian literal");
  if (s.back() != 'i') return Gauss(parse_rat(s));
  s.pop_back();
  // split real and imaginary part at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Gauss(Rat(0), parse_rat(s));
  return Gauss(parse_rat(s.substr(0, split)), parse_rat(s.substr(split)));
}

}  // namespace folia
