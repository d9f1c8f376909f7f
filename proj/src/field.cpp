#include "f4/field.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace f4 {

namespace {

// Sign of r + s*sqrt2 from rationals: sign(r|r| + 2 s|s|).
int sign_of(const Rational& r, const Rational& s) {
  const int sr = sgn(r);
  const int ss = sgn(s);
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  const Rational lhs = r * r;
  const Rational rhs = 2 * s * s;
  const int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? sr : ss);
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  FieldScalar run() {
    FieldScalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse field scalar '" + std::string(s_) + "': " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool at_sqrt2() {
    skip();
    return s_.substr(pos_, 5) == "sqrt2" || s_.substr(pos_, 4) == "\xE2\x88\x9A" "2";
  }

  FieldScalar expr() {
    FieldScalar v;
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    v = term();
    if (negate) v = -v;
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  FieldScalar term() {
    FieldScalar v = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v *= factor();
      } else if (peek('/')) {
        ++pos_;
        FieldScalar d = factor();
        auto q = checked_div(v, d);
        if (!q) fail("division by zero");
        v = *q;
      } else if (at_sqrt2() || peek('(')) {
        v *= factor();
      } else {
        return v;
      }
    }
  }

  FieldScalar factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_.substr(pos_, 5) == "sqrt2") {
      pos_ += 5;
      return FieldScalar::sqrt2();
    }
    if (s_.substr(pos_, 4) == "\xE2\x88\x9A" "2") {
      pos_ += 4;
      return FieldScalar::sqrt2();
    }
    if (s_[pos_] == '(') {
      ++pos_;
      FieldScalar v = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    if (s_[pos_] == '-') {
      ++pos_;
      return -factor();
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number at offset " + std::to_string(start));
    return FieldScalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
  }
};

std::string surd_term(const Rational& c) {
  const Rational a = abs(c);
  std::string body;
  if (a == 1) {
    body = "sqrt2";
  } else if (a.get_den() == 1) {
    body = a.get_str() + "sqrt2";
  } else {
    body = "(" + a.get_str() + ")sqrt2";
  }
  return body;
}

}  // namespace

int FieldScalar::sign() const { return sign_of(rat_, surd_); }

std::optional<FieldScalar> FieldScalar::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) return std::nullopt;
  return FieldScalar(Rational(rat_ / n), Rational(-surd_ / n));
}

double FieldScalar::to_double() const {
  return rat_.get_d() + surd_.get_d() * std::sqrt(2.0);
}

std::string FieldScalar::str() const {
  if (sgn(surd_) == 0) return rat_.get_str();
  if (sgn(rat_) == 0) return surd_.get_str() + "*sqrt2";
  const Rational a = abs(surd_);
  return rat_.get_str() + (sgn(surd_) > 0 ? " + " : " - ") + a.get_str() + "*sqrt2";
}

std::string FieldScalar::pretty() const {
  if (sgn(surd_) == 0) return rat_.get_str();
  const std::string s = surd_term(surd_);
  if (sgn(rat_) == 0) return (sgn(surd_) < 0 ? "-" : "") + s;
  return rat_.get_str() + (sgn(surd_) > 0 ? "+" : "-") + s;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  rat_ += o.rat_;
  surd_ += o.surd_;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  rat_ -= o.rat_;
  surd_ -= o.surd_;
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  Rational r = rat_ * o.rat_ + 2 * surd_ * o.surd_;
  Rational s = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  auto inv = o.inverse();
  if (!inv) throw std::domain_error("FieldScalar division by zero");
  return *this *= *inv;
}

std::strong_ordering operator<=>(const FieldScalar& a, const FieldScalar& b) {
  const int s = sign_of(Rational(a.rat_ - b.rat_), Rational(a.surd_ - b.surd_));
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

FieldScalar FieldScalar::parse(std::string_view text) { return Parser(text).run(); }

std::optional<FieldScalar> checked_div(const FieldScalar& a, const FieldScalar& b) {
  auto inv = b.inverse();
  if (!inv) return std::nullopt;
  return a * *inv;
}

std::optional<FieldScalar> exact_sqrt(const FieldScalar& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return FieldScalar(0);
  const Rational& a = x.rat();
  const Rational& b = x.surd();
  // (u + v sqrt2)^2 = a + b sqrt2  <=>  u^2 + 2v^2 = a, 2uv = b.
  if (sgn(b) == 0) {
    if (auto u = rational_sqrt(a)) return FieldScalar(*u);
    if (auto v = rational_sqrt(Rational(a / 2))) return FieldScalar(Rational(0), *v);
    return std::nullopt;
  }
  auto disc = rational_sqrt(x.norm());
  if (!disc) return std::nullopt;
  for (const Rational& u2 : {Rational((a + *disc) / 2), Rational((a - *disc) / 2)}) {
    auto u = rational_sqrt(u2);
    if (!u || sgn(*u) == 0) continue;
    FieldScalar root(*u, Rational(b / (2 * *u)));
    if (root.sign() < 0) root = -root;
    if (root * root == x) return root;
  }
  return std::nullopt;
}

FieldScalar abs(const FieldScalar& x) { return x.sign() < 0 ? -x : x; }

std::size_t hash_value(const FieldScalar& x) {
  auto mix = [](std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  };
  std::size_t h = 0;
  for (const Rational* r : {&x.rat(), &x.surd()}) {
    h = mix(h, mpz_get_ui(r->get_num_mpz_t()));
    h = mix(h, static_cast<std::size_t>(sgn(*r) + 1));
    h = mix(h, mpz_get_ui(r->get_den_mpz_t()));
  }
  return h;
}

}  // namespace f4
