#include "arrkit/exactmath/int_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "arrkit/error.hpp"

namespace arrkit {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer polynomial overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer polynomial overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer polynomial overflow");
  return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, std::int64_t coeff) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::from_roots(const std::vector<std::int64_t>& roots) {
  IntPoly p({1});
  for (auto r : roots) p = p * IntPoly({checked_mul(-1, r), 1});
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::int64_t IntPoly::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = checked_add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = checked_sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  }
  return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1)
    throw InvalidInput("divmod_monic requires a monic divisor");
  std::vector<std::int64_t> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {IntPoly{}, *this};
  std::vector<std::int64_t> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (int i = degree(); i >= dd; --i) {
    const std::int64_t q = rem[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
      slot = checked_sub(slot, checked_mul(q, divisor.c_[static_cast<std::size_t>(j)]));
    }
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool IntPoly::divisible_by(const IntPoly& divisor) const {
  return divmod_monic(divisor).second.is_zero();
}

std::optional<std::vector<std::int64_t>> IntPoly::nonnegative_integer_roots() const {
  if (is_zero() || leading() != 1) return std::nullopt;
  std::vector<std::int64_t> roots;
  IntPoly rest = *this;
  // Roots of a monic split polynomial with nonnegative roots are bounded by
  // the sum of roots, which is |coefficient of t^{d-1}|.
  const std::int64_t bound = rest.degree() >= 1 ? std::abs(rest.coeff(rest.degree() - 1)) : 0;
  for (std::int64_t r = 0; r <= bound && rest.degree() > 0; ++r) {
    while (rest.degree() > 0) {
      auto [q, rem] = rest.divmod_monic(IntPoly({-r, 1}));
      if (!rem.is_zero()) break;
      roots.push_back(r);
      rest = std::move(q);
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  return roots;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace arrkit
