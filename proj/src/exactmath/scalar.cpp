#include "arrkit/exactmath/scalar.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "arrkit/error.hpp"

namespace arrkit {
namespace {

using QPoly = std::vector<Rational>;  // constant term first, trimmed

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

// Reduce an arbitrary polynomial modulo the monic Phi_r in place.
void reduce_mod(QPoly& p, const IntPoly& phi) {
  const int d = phi.degree();
  for (int i = deg(p); i >= d; --i) {
    const Rational c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j) {
      const long pj = phi.coeff(j);
      if (pj != 0) p[static_cast<std::size_t>(i - d + j)] -= c * pj;
    }
  }
  if (static_cast<int>(p.size()) > d) p.resize(static_cast<std::size_t>(d));
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (deg(a) < deg(b)) return {q, a};
  q.assign(static_cast<std::size_t>(deg(a) - deg(b)) + 1, Rational(0));
  const Rational lead = b.back();
  for (int i = deg(a); i >= deg(b); --i) {
    const Rational c = a[static_cast<std::size_t>(i)] / lead;
    q[static_cast<std::size_t>(i - deg(b))] = c;
    if (c == 0) continue;
    for (int j = 0; j <= deg(b); ++j) a[static_cast<std::size_t>(i - deg(b) + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t())) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::size_t>(mpz_get_ui(z.get_mpz_t())) + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
  if (sgn(z) < 0) h = ~h;
  return h;
}

std::size_t hash_q(const Rational& q) {
  return hash_mpz(q.get_num()) * 31 + hash_mpz(q.get_den());
}

}  // namespace

Field Field::cyclotomic(int r) {
  if (r < 1) throw InvalidInput("cyclotomic order must be >= 1");
  return {Kind::cyclotomic, r};
}

int Field::degree() const { return kind == Kind::rational ? 1 : euler_totient(order); }

std::string Field::to_string() const {
  return kind == Kind::rational ? std::string("rational") : "cyclotomic(" + std::to_string(order) + ")";
}

Scalar Scalar::zero(const Field& f) { return integer(0, f); }

Scalar Scalar::integer(long v, const Field& f) { return from_rational(Rational(v), f); }

Scalar Scalar::from_rational(const Rational& q, const Field& f) {
  Scalar s(q);
  if (f.kind == Field::Kind::cyclotomic) {
    s.ctx_ = &cyclotomic_context(f.order);
    s.rest_.assign(static_cast<std::size_t>(s.ctx_->degree - 1), Rational(0));
  }
  return s;
}

Scalar Scalar::zeta_power(long n, const Field& f) {
  if (f.kind != Field::Kind::cyclotomic) throw FieldMismatch("zeta requires a cyclotomic field");
  long e = n % f.order;
  if (e < 0) e += f.order;
  std::vector<Rational> p(static_cast<std::size_t>(e) + 1, Rational(0));
  p.back() = 1;
  return from_polynomial(f, std::move(p));
}

Scalar Scalar::from_polynomial(const Field& f, std::vector<Rational> coeffs) {
  if (f.kind == Field::Kind::rational) {
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) throw FieldMismatch("polynomial in zeta over the rational field");
    return Scalar(coeffs.empty() ? Rational(0) : coeffs[0]);
  }
  const auto& ctx = cyclotomic_context(f.order);
  for (auto& c : coeffs) c.canonicalize();
  reduce_mod(coeffs, ctx.phi);
  coeffs.resize(static_cast<std::size_t>(ctx.degree), Rational(0));
  Scalar s(coeffs[0]);
  s.ctx_ = &ctx;
  s.rest_.assign(coeffs.begin() + 1, coeffs.end());
  return s;
}

Field Scalar::field() const { return ctx_ ? Field::cyclotomic(ctx_->order) : Field::rational(); }

bool Scalar::is_zero() const {
  if (c0_ != 0) return false;
  for (const auto& c : rest_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c0_ != 1) return false;
  for (const auto& c : rest_)
    if (c != 0) return false;
  return true;
}

const Rational& Scalar::coefficient(int i) const {
  static const Rational kZero(0);
  if (i == 0) return c0_;
  if (i < 0 || i > static_cast<int>(rest_.size())) return kZero;
  return rest_[static_cast<std::size_t>(i - 1)];
}

void Scalar::require_same(const Scalar& o) const {
  if (ctx_ != o.ctx_) throw FieldMismatch("scalars from different fields: " + field().to_string() + " vs " + o.field().to_string());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.c0_ = -r.c0_;
  for (auto& c : r.rest_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  c0_ += o.c0_;
  for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] += o.rest_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  c0_ -= o.c0_;
  for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] -= o.rest_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (rest_.empty()) {
    c0_ *= o.c0_;
    return *this;
  }
  const int d = ctx_->degree;
  QPoly prod(static_cast<std::size_t>(2 * d - 1), Rational(0));
  for (int i = 0; i < d; ++i) {
    const Rational& a = coefficient(i);
    if (a == 0) continue;
    for (int j = 0; j < d; ++j) {
      const Rational& b = o.coefficient(j);
      if (b != 0) prod[static_cast<std::size_t>(i + j)] += a * b;
    }
  }
  reduce_mod(prod, ctx_->phi);
  prod.resize(static_cast<std::size_t>(d), Rational(0));
  c0_ = prod[0];
  for (int i = 1; i < d; ++i) rest_[static_cast<std::size_t>(i - 1)] = prod[static_cast<std::size_t>(i)];
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  if (o.is_zero()) throw DivisionByZero();
  if (rest_.empty()) {
    c0_ /= o.c0_;
    return *this;
  }
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& b, const Scalar& c) {
  if (rest_.empty() && b.rest_.empty() && c.rest_.empty() && ctx_ == b.ctx_ && ctx_ == c.ctx_) {
    if (b.c0_ == 0 || c.c0_ == 0) return;
    c0_ -= b.c0_ * c.c0_;
    return;
  }
  *this -= b * c;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (rest_.empty()) {
    Scalar r = *this;
    r.c0_ = 1 / c0_;
    return r;
  }
  // Extended Euclid on (a, Phi_r): s*a + t*Phi = 1 gives a^{-1} = s mod Phi.
  QPoly a(static_cast<std::size_t>(ctx_->degree), Rational(0));
  for (int i = 0; i < ctx_->degree; ++i) a[static_cast<std::size_t>(i)] = coefficient(i);
  trim(a);
  QPoly b;
  for (auto c : ctx_->phi.coeffs()) b.emplace_back(static_cast<long>(c));
  QPoly s0{Rational(1)}, s1;
  QPoly r0 = a, r1 = b;
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_r is irreducible.
  if (deg(r0) != 0) throw Inconsistency("cyclotomic inverse: gcd is not constant");
  const Rational inv = 1 / r0[0];
  for (auto& c : s0) c *= inv;
  return from_polynomial(field(), std::move(s0));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (a.c0_ != b.c0_) return false;
  for (std::size_t i = 0; i < a.rest_.size(); ++i)
    if (a.rest_[i] != b.rest_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  int c = cmp(a.c0_, b.c0_);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < a.rest_.size(); ++i) {
    c = cmp(a.rest_[i], b.rest_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Scalar::hash() const {
  std::size_t h = hash_q(c0_);
  for (const auto& c : rest_) h = h * 1000003ULL ^ hash_q(c);
  return h;
}

std::string Scalar::to_string() const {
  if (rest_.empty()) return c0_.get_str();
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(rest_.size()); i >= 0; --i) {
    const Rational& c = coefficient(i);
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    const Rational a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return first ? std::string("0") : os.str();
}

namespace {

struct ScalarLexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("expected integer", start);
    return mpz_class(std::string(s.substr(start, pos - start)));
  }
  Rational rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (accept('/')) {
      const std::size_t at = pos;
      den = integer();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const Field& f) {
  ScalarLexer lx{text};
  std::vector<Rational> poly;
  auto add_term = [&](std::size_t power, const Rational& c) {
    if (poly.size() <= power) poly.resize(power + 1, Rational(0));
    poly[power] += c;
  };
  if (lx.at_end()) throw ParseError("empty scalar", 0);
  bool first = true;
  while (!lx.at_end()) {
    int sign = 1;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", lx.pos);
    }
    first = false;
    Rational coeff(1);
    bool have_coeff = false;
    if (lx.peek_digit()) {
      coeff = lx.rational();
      have_coeff = true;
    }
    std::size_t power = 0;
    if (have_coeff && lx.accept('*')) {
      if (!lx.peek('z')) throw ParseError("expected 'z' after '*'", lx.pos);
    }
    if (lx.accept('z')) {
      if (f.kind != Field::Kind::cyclotomic) throw ParseError("'z' is only valid in a cyclotomic field", lx.pos - 1);
      power = 1;
      if (lx.accept('^')) power = lx.integer().get_ui();
    } else if (!have_coeff) {
      throw ParseError("expected a number or 'z'", lx.pos);
    }
    add_term(power, sign * coeff);
  }
  return from_polynomial(f, std::move(poly));
}

std::strong_ordering compare_vectors(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a[i] <=> b[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t VecHash::operator()(const Vec& v) const {
  std::size_t h = v.size();
  for (const auto& s : v) h = h * 0x100000001b3ULL ^ s.hash();
  return h;
}

}  // namespace arrkit
