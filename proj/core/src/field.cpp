#include "pyrito/field.hpp"

#include <mpfr.h>

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "pyrito/error.hpp"

namespace pyrito {

namespace {

// u + v*sqrt2 over Q. The field is viewed as Q(sqrt2)[sqrt5]: an element is
// A + B*sqrt5 with A = a + b*sqrt2 and B = c + d*sqrt2.
struct Quad2 {
  Rational u, v;

  Quad2 operator+(const Quad2& o) const { return {u + o.u, v + o.v}; }
  Quad2 operator-(const Quad2& o) const { return {u - o.u, v - o.v}; }
  Quad2 operator*(const Quad2& o) const { return {u * o.u + 2 * v * o.v, u * o.v + v * o.u}; }
  Quad2 scaled(long k) const { return {u * k, v * k}; }
  Quad2 conj() const { return {u, -v}; }
  Rational norm() const { return u * u - 2 * v * v; }
  bool is_zero() const { return sgn(u) == 0 && sgn(v) == 0; }

  int sign() const {
    const int su = sgn(u);
    const int sv = sgn(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // Opposite signs: compare u^2 with 2 v^2.
    return su * sgn(norm());
  }
};

void canon(Rational& r) { r.canonicalize(); }

// RAII for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(x_, bits); }
  ~Mpfr() { mpfr_clear(x_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

void evaluate(const FieldScalar& x, Mpfr& out, mpfr_prec_t bits) {
  Mpfr term(bits);
  Mpfr root(bits);
  mpfr_set_q(out.get(), x.a().get_mpq_t(), MPFR_RNDN);
  const std::pair<const Rational*, unsigned> parts[] = {{&x.b(), 2}, {&x.c(), 5}, {&x.d(), 10}};
  for (const auto& [coef, radicand] : parts) {
    if (sgn(*coef) == 0) continue;
    mpfr_sqrt_ui(root.get(), radicand, MPFR_RNDN);
    mpfr_mul_q(term.get(), root.get(), coef->get_mpq_t(), MPFR_RNDN);
    mpfr_add(out.get(), out.get(), term.get(), MPFR_RNDN);
  }
}

std::string rational_text(const Rational& r) { return r.get_str(); }

}  // namespace

FieldScalar::FieldScalar(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  canon(a_);
  canon(b_);
  canon(c_);
  canon(d_);
}

FieldScalar FieldScalar::tau() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
FieldScalar FieldScalar::sigma() { return {Rational(1, 2), 0, Rational(-1, 2), 0}; }

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

// sqrt2*sqrt2 = 2, sqrt5*sqrt5 = 5, sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5,
// sqrt5*sqrt10 = 5 sqrt2, sqrt10*sqrt10 = 10.
FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  if (is_rational() && o.is_rational()) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + 2 * b_ * o.b_ + 5 * c_ * o.c_ + 10 * d_ * o.d_;
  Rational nb = a_ * o.b_ + b_ * o.a_ + 5 * (c_ * o.d_ + d_ * o.c_);
  Rational nc = a_ * o.c_ + c_ * o.a_ + 2 * (b_ * o.d_ + d_ * o.b_);
  Rational nd = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  a_ = std::move(na);
  b_ = std::move(nb);
  c_ = std::move(nc);
  d_ = std::move(nd);
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) { return *this *= o.inverse(); }

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(sqrt2, sqrt5)");
  if (is_rational()) return FieldScalar(1 / a_);
  // 1/(A + B r5) = (A - B r5) / (A^2 - 5 B^2), and 1/N = conj(N)/norm(N) in Q(r2).
  const Quad2 big_a{a_, b_};
  const Quad2 big_b{c_, d_};
  const Quad2 n = big_a * big_a - (big_b * big_b).scaled(5);
  const Rational nn = n.norm();
  const Quad2 n_inv{n.u / nn, -n.v / nn};
  const Quad2 ra = big_a * n_inv;
  const Quad2 rb = (big_b * n_inv).scaled(-1);
  return {ra.u, ra.v, rb.u, rb.v};
}

int FieldScalar::sign() const {
  const Quad2 big_a{a_, b_};
  const Quad2 big_b{c_, d_};
  const int sa = big_a.sign();
  const int sb = big_b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the sign of A + B sqrt5 is sign(A) * sign(A^2 - 5 B^2).
  const Quad2 diff = big_a * big_a - (big_b * big_b).scaled(5);
  return sa * diff.sign();
}

double FieldScalar::to_double() const {
  Mpfr v(256);
  evaluate(*this, v, 256);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

std::string FieldScalar::to_decimal(int digits) const { return decimal_times_sqrt(*this, 1, digits); }

std::string decimal_times_sqrt(const FieldScalar& x, unsigned radicand, int digits) {
  if (digits < 1) digits = 1;
  if (x.is_zero() || radicand == 0) return "0";
  const auto bits = static_cast<mpfr_prec_t>(digits * 3.33) + 96;
  Mpfr v(bits);
  evaluate(x, v, bits);
  if (radicand != 1) {
    Mpfr root(bits);
    mpfr_sqrt_ui(root.get(), radicand, MPFR_RNDN);
    mpfr_mul(v.get(), v.get(), root.get(), MPFR_RNDN);
  }
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, v.get());
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

std::string FieldScalar::to_string() const {
  std::string out;
  const std::pair<const Rational*, const char*> terms[] = {
      {&a_, ""}, {&b_, "r2"}, {&c_, "r5"}, {&d_, "r10"}};
  for (const auto& [coef, symbol] : terms) {
    const int s = sgn(*coef);
    if (s == 0) continue;
    const Rational mag = abs(*coef);
    std::string body = rational_text(mag);
    if (*symbol != '\0') body += std::string("*") + symbol;
    if (out.empty()) {
      out = (s < 0 ? "-" : "") + body;
    } else {
      out += (s < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  FieldScalar parse() {
    skip_space();
    if (at_end()) fail("empty literal");
    FieldScalar total;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_space();
      FieldScalar t = term();
      total += sign < 0 ? -t : t;
      first = false;
    }
    return total;
  }

 private:
  FieldScalar term() {
    if (at_end()) fail("dangling sign");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational coef = number();
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        Rational den = number();
        if (sgn(den) == 0) fail("zero denominator");
        coef /= den;
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        return FieldScalar(coef) * atom();
      }
      return FieldScalar(coef);
    }
    return atom();
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Rational(std::string(text_.substr(start, pos_ - start)));
  }

  FieldScalar atom() {
    std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "r2") return FieldScalar::sqrt2();
    if (name == "r5") return FieldScalar::sqrt5();
    if (name == "r10") return FieldScalar::sqrt10();
    if (name == "tau") return FieldScalar::tau();
    if (name == "sigma") return FieldScalar::sigma();
    fail("unknown symbol '" + std::string(name) + "'");
    return {};
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed field literal '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldScalar FieldScalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

FieldScalar field_arith(FieldOp op, const FieldScalar& x, const FieldScalar& y) {
  switch (op) {
    case FieldOp::add: return x + y;
    case FieldOp::sub: return x - y;
    case FieldOp::mul: return x * y;
    case FieldOp::neg: return -x;
    case FieldOp::inv: return x.inverse();
  }
  return {};
}

int field_sign(const FieldScalar& x) { return x.sign(); }

int lex_compare(const FieldScalar& x, const FieldScalar& y) {
  if (int r = cmp(x.a(), y.a())) return r < 0 ? -1 : 1;
  if (int r = cmp(x.b(), y.b())) return r < 0 ? -1 : 1;
  if (int r = cmp(x.c(), y.c())) return r < 0 ? -1 : 1;
  if (int r = cmp(x.d(), y.d())) return r < 0 ? -1 : 1;
  return 0;
}

std::size_t hash_value(const FieldScalar& x) {
  std::size_t h = 0;
  for (const Rational* r : {&x.a(), &x.b(), &x.c(), &x.d()}) {
    h = h * 1000003u ^ mpz_get_ui(r->get_num_mpz_t());
    h = h * 1000003u ^ mpz_get_ui(r->get_den_mpz_t());
    h = h * 31u + static_cast<std::size_t>(sgn(*r) + 1);
  }
  return h;
}

}  // namespace pyrito
