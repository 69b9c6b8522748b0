#include "coeff/field.hpp"

#include <cctype>

#include "coeff/gcd.hpp"

namespace qloop::coeff {

Field::Field(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly(mpq_class(1));
    return;
  }
  auto [cn, n] = primitive_part(num);
  auto [cd, d] = primitive_part(den);
  const Monomial md = d.min_monomial();
  if (!md.is_one()) {
    d = d.mul_monomial(md.inverse());
    n = n.mul_monomial(md.inverse());
  }
  mpq_class scale = cn / cd;
  if (d.is_constant()) {  // primitive constant is 1
    num_ = to_rational(n).scaled(scale);
    den_ = LaurentPoly(mpq_class(1));
    return;
  }
  const IntPoly g = gcd(n, d);
  if (!g.is_one()) {
    IntPoly qn, qd;
    if (!try_divide(n, g, qn) || !try_divide(d, g, qd)) throw InternalError("gcd does not divide its arguments");
    n = std::move(qn);
    d = std::move(qd);
  }
  const mpz_class lc = d.leading().coef;
  scale /= lc;
  num_ = to_rational(n).scaled(scale);
  den_ = to_rational(d).scaled(mpq_class(1, 1) / mpq_class(lc));
}

Field Field::operator-() const { return Field(Canonical{}, -num_, den_); }

Field Field::operator+(const Field& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    if (den_.is_one()) return Field(Canonical{}, num_ + o.num_, den_);
    return Field(num_ + o.num_, den_);
  }
  if (o.den_.is_one()) return Field(Canonical{}, num_ + o.num_ * den_, den_);  // still coprime
  if (den_.is_one()) return Field(Canonical{}, num_ * o.den_ + o.num_, o.den_);
  return Field(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Field Field::operator-(const Field& o) const { return *this + (-o); }

Field Field::operator*(const Field& o) const {
  if (is_zero() || o.is_zero()) return Field();
  if (den_.is_one() && o.den_.is_one()) return Field(Canonical{}, num_ * o.num_, den_);
  if (o.is_monomial()) {
    return Field(Canonical{}, num_ * o.num_, den_);
  }
  if (is_monomial()) {
    return Field(Canonical{}, num_ * o.num_, o.den_);
  }
  return Field(num_ * o.num_, den_ * o.den_);
}

Field Field::inverse() const {
  if (is_zero()) throw DomainError("division by zero in the coefficient field");
  return Field(den_, num_);
}

Field Field::operator/(const Field& o) const {
  if (o.is_zero()) throw DomainError("division by zero in the coefficient field");
  if (o.is_monomial()) {
    const auto& t = o.num_.leading();
    return Field(Canonical{}, num_.mul_term(t.mono.inverse(), mpq_class(1) / t.coef), den_);
  }
  return *this * o.inverse();
}

Field Field::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Field result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Field Field::substitute(Var var, const Monomial& repl) const {
  const auto v = static_cast<std::size_t>(var);
  return Field(num_.substitute(v, repl), den_.substitute(v, repl));
}

std::string Field::to_string() const { return render(*this); }

namespace {

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(i);
    if (m.e[i] != 1) out += '^' + std::to_string(m.e[i]);
  }
  return out;
}

}  // namespace

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.coef < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const mpq_class a = abs(t.coef);
    if (t.mono.is_one()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + '*';
      out += render_monomial(t.mono);
    }
  }
  return out;
}

std::string render(const Field& f) {
  if (f.den().is_one()) return render(f.num());
  return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Field parse() {
    Field v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("cannot parse field element '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Field expr() {
    Field v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Field term() {
    Field v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/')) {
        Field d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else
        return v;
    }
  }
  Field unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Field power() {
    Field base = atom();
    if (eat('^')) {
      bool neg = false;
      skip();
      if (eat('-')) neg = true;
      skip();
      const long k = integer();
      if (k > 100000) fail("exponent too large");
      if (neg && base.is_zero()) fail("division by zero");
      base = base.pow(static_cast<int>(neg ? -k : k));
    }
    return base;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too long");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Field atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Field v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Field(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < kNumVars; ++i)
        if (var_name(i) == name) return Field::var(static_cast<Var>(i));
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Field parse_field(std::string_view text) { return Parser(text).parse(); }

}  // namespace qloop::coeff
