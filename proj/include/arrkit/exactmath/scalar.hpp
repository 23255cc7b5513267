#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arrkit/exactmath/cyclotomic.hpp"

namespace arrkit {

using Rational = mpq_class;
using BigInt = mpz_class;

// Field descriptor carried by every arrangement and matrix.
struct Field {
  enum class Kind { rational, cyclotomic };
  Kind kind = Kind::rational;
  int order = 1;

  static Field rational() { return {}; }
  static Field cyclotomic(int r);

  // Dimension over Q.
  int degree() const;
  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

// An exact element of Q or of Q(zeta_r), stored as the coefficient vector of
// its unique representative of degree < deg(Phi_r).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Rational q) : c0_(std::move(q)) { c0_.canonicalize(); }
  explicit Scalar(long v) : c0_(v) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f) { return integer(1, f); }
  static Scalar integer(long v, const Field& f);
  static Scalar from_rational(const Rational& q, const Field& f);
  // zeta^n for the primitive root of the given cyclotomic field.
  static Scalar zeta_power(long n, const Field& f);
  // Arbitrary-length polynomial in zeta, reduced modulo Phi_r.
  static Scalar from_polynomial(const Field& f, std::vector<Rational> coeffs);

  Field field() const;
  bool same_field(const Scalar& o) const { return ctx_ == o.ctx_; }
  bool is_zero() const;
  bool is_one() const;
  // Coefficient of zeta^i in the reduced representation.
  const Rational& coefficient(int i) const;
  int degree_over_q() const { return 1 + static_cast<int>(rest_.size()); }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // a -= b * c without a temporary; the hot path of elimination.
  void sub_mul(const Scalar& b, const Scalar& c);

  friend bool operator==(const Scalar& a, const Scalar& b);
  // Total order used for canonical keys: by value over Q, lexicographic on
  // coefficients in cyclotomic fields.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::size_t hash() const;
  std::string to_string() const;
  static Scalar parse(std::string_view text, const Field& f);

 private:
  void require_same(const Scalar& o) const;

  const CyclotomicContext* ctx_ = nullptr;  // null: the rational field
  Rational c0_;
  std::vector<Rational> rest_;  // coefficients of zeta^1 .. zeta^{d-1}
};

using Vec = std::vector<Scalar>;

// Lexicographic ordering over equal-length vectors.
std::strong_ordering compare_vectors(const Vec& a, const Vec& b);

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return compare_vectors(a, b) < 0; }
};

struct VecHash {
  std::size_t operator()(const Vec& v) const;
};

}  // namespace arrkit
