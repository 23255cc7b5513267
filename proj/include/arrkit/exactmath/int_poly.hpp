#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arrkit {

// Dense polynomial with int64 coefficients, constant term first. Every
// arithmetic step is overflow-checked and throws Error on overflow.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  static IntPoly monomial(int degree, std::int64_t coeff = 1);
  // prod (t - r) over the given roots.
  static IntPoly from_roots(const std::vector<std::int64_t>& roots);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int i) const;
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  std::int64_t evaluate(std::int64_t t) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const = default;

  // Division by a monic divisor. Returns {quotient, remainder}.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;
  bool divisible_by(const IntPoly& divisor) const;

  // Roots of a polynomial that splits over Z into linear factors with
  // nonnegative integer roots, sorted ascending with multiplicity; nullopt if
  // it does not split that way. Requires a monic input.
  std::optional<std::vector<std::int64_t>> nonnegative_integer_roots() const;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace arrkit
