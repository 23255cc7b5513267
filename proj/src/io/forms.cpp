#include "arrkit/io/forms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "arrkit/error.hpp"

namespace arrkit {

namespace {

// A form before the dimension is known: x-coefficients by 0-based index,
// plus the coefficient of z.
struct RawForm {
  std::map<std::size_t, Scalar> x;
  std::optional<Scalar> z;
  std::size_t position = 0;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '&'; }

class Parser {
 public:
  Parser(std::string_view s, const Field& f) : s_(s), f_(f) {}

  std::vector<RawForm> run() {
    std::vector<RawForm> out;
    while (true) {
      skip_space(false);
      if (at_end()) break;
      if (peek(';') || peek('\n') || peek('.')) {
        ++pos_;
        continue;
      }
      segment(out);
    }
    return out;
  }

 private:
  std::string_view s_;
  Field f_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  bool at_end() const { return pos_ >= s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool peek_word(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }

  // Skips blanks and LaTeX spacing. Newlines separate segments, so they
  // are only skipped inside parentheses.
  void skip_space(bool newlines) {
    while (!at_end()) {
      const char c = s_[pos_];
      if (c == '\n' && !newlines) return;
      if (is_space(c)) {
        ++pos_;
      } else if (peek_word("\\\\")) {
        pos_ += 2;
      } else if (c == '\\' && pos_ + 1 < s_.size() && std::string_view(",;!: ").find(s_[pos_ + 1]) != std::string_view::npos) {
        pos_ += 2;
      } else {
        return;
      }
    }
  }

  bool accept(char c, bool newlines) {
    skip_space(newlines);
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool zeta_ahead() const { return peek_word("zeta") || peek_word("\\zeta") || peek_word("\xCE\xB6"); }
  bool variable_ahead() const { return peek('x') || (peek('z') && !zeta_ahead()); }

  // True if the parenthesized group starting here mentions a variable.
  bool group_has_variable() const {
    int depth = 0;
    for (std::size_t i = pos_; i < s_.size(); ++i) {
      const char c = s_[i];
      if (c == '(') ++depth;
      else if (c == ')' && --depth == 0) return false;
      else if (c == 'x') return true;
      else if (c == 'z' && s_.substr(i, 4) != "zeta") return true;
      else if (c == 'z') i += 3;
    }
    return false;
  }

  unsigned long integer() {
    skip_space(true);
    const bool braced = peek('{');
    if (braced) ++pos_;
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const auto v = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (braced && !accept('}', true)) fail("expected '}'");
    return v;
  }

  // number [/ number] | zeta [^n] | ( scalar )
  std::optional<Scalar> atom(bool newlines) {
    skip_space(newlines);
    if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational q(std::string(s_.substr(start, pos_ - start)));
      if (peek('/')) {
        ++pos_;
        const std::size_t d = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d == pos_) fail("expected a denominator");
        Rational den(std::string(s_.substr(d, pos_ - d)));
        if (den == 0) fail("zero denominator");
        q /= den;
      }
      return Scalar::from_rational(q, f_);
    }
    if (zeta_ahead()) {
      const std::size_t at = pos_;
      pos_ += peek_word("zeta") ? 4 : peek_word("\\zeta") ? 5 : 2;
      if (f_.kind != Field::Kind::cyclotomic) {
        pos_ = at;
        fail("zeta needs a cyclotomic field");
      }
      long n = 1;
      if (accept('^', newlines)) n = static_cast<long>(integer());
      return Scalar::zeta_power(n, f_);
    }
    if (peek('(') && !group_has_variable()) {
      ++pos_;
      Scalar v = scalar_sum();
      if (!accept(')', true)) fail("expected ')'");
      return v;
    }
    return std::nullopt;
  }

  // atom (['*'] atom)*
  std::optional<Scalar> coefficient(bool newlines) {
    auto c = atom(newlines);
    if (!c) return c;
    while (true) {
      const std::size_t save = pos_;
      accept('*', newlines);
      auto next = atom(newlines);
      if (!next) {
        pos_ = save;
        return c;
      }
      *c *= *next;
    }
  }

  Scalar scalar_sum() {
    Scalar total = Scalar::zero(f_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('+', true)) {
      } else if (accept('-', true)) {
        sign = -1;
      } else if (!first) {
        return total;
      }
      first = false;
      auto c = coefficient(true);
      if (!c) fail("expected a number or zeta");
      total += sign < 0 ? -*c : *c;
    }
  }

  // Reads x<i>, x_<i>, x_{<i>} or z. Returns npos for z.
  std::size_t variable() {
    if (peek('z')) {
      ++pos_;
      return std::string_view::npos;
    }
    ++pos_;  // 'x'
    if (peek('_')) ++pos_;
    const std::size_t at = pos_;
    const auto i = integer();
    if (i == 0) {
      pos_ = at;
      fail("variables are numbered from 1");
    }
    return i - 1;
  }

  // sum of [coefficient]['*'][variable]; returns the number of terms.
  std::size_t linear(RawForm& f, bool newlines, bool stop_at_group) {
    std::size_t terms = 0;
    while (true) {
      skip_space(newlines);
      const std::size_t term_start = pos_;
      int sign = 1;
      if (accept('+', newlines)) {
      } else if (accept('-', newlines)) {
        sign = -1;
      } else if (terms > 0) {
        return terms;
      }
      skip_space(newlines);
      if (stop_at_group && peek('(') && group_has_variable()) {
        if (sign < 0 || pos_ != term_start) fail("sign before a parenthesized factor");
        return terms;
      }
      auto c = coefficient(newlines);
      accept('*', newlines);
      skip_space(newlines);
      if (!variable_ahead()) {
        if (c) fail("constant term in a linear form");
        if (terms == 0 && pos_ == term_start) return 0;
        fail("expected a variable");
      }
      const auto v = variable();
      Scalar coeff = c ? *c : Scalar::one(f_);
      if (sign < 0) coeff = -coeff;
      if (v == std::string_view::npos) {
        f.z = f.z ? *f.z + coeff : coeff;
      } else {
        auto [it, fresh] = f.x.try_emplace(v, coeff);
        if (!fresh) it->second += coeff;
      }
      ++terms;
    }
  }

  void segment(std::vector<RawForm>& out) {
    std::vector<std::pair<RawForm, std::size_t>> factors;  // form, number of terms
    bool bare_sum = false;
    while (true) {
      skip_space(false);
      if (at_end() || peek(';') || peek('\n') || peek('.')) break;
      RawForm f;
      f.position = pos_;
      std::size_t terms = 0;
      if (peek('(') && group_has_variable()) {
        ++pos_;
        terms = linear(f, true, false);
        if (!accept(')', true)) fail("expected ')'");
        skip_space(false);
        if (peek('^')) fail("powers of factors are not supported");
        terms = 1;
      } else {
        terms = linear(f, false, true);
        if (terms == 0) fail("expected a linear form");
        bare_sum = bare_sum || terms > 1;
      }
      factors.emplace_back(std::move(f), terms);
      accept('*', false);
    }
    if (factors.size() > 1 && bare_sum) fail("a sum in a product must be parenthesized");
    for (auto& [f, t] : factors) out.push_back(std::move(f));
  }
};

bool is_rational(const Scalar& c) {
  for (int i = 1; i < c.degree_over_q(); ++i)
    if (c.coefficient(i) != 0) return false;
  return true;
}

std::string coefficient_text(const Scalar& c) {
  if (is_rational(c)) return c.to_string();
  std::string s = c.to_string();
  std::string out;
  for (char ch : s) {
    if (ch == 'z') out += "zeta";
    else out += ch;
  }
  return "(" + out + ")";
}

}  // namespace

ParsedForms parse_linear_forms(std::string_view text, std::optional<std::size_t> dim, const Field& field) {
  auto raw = Parser(text, field).run();
  std::size_t max_x = 0;
  bool uses_z = false;
  for (const auto& f : raw) {
    if (!f.x.empty()) max_x = std::max(max_x, f.x.rbegin()->first + 1);
    uses_z = uses_z || f.z.has_value();
  }
  const std::size_t n = dim ? *dim : max_x + (uses_z ? 1 : 0);
  if (n == 0) throw ParseError("no forms", 0);
  if (max_x + (uses_z ? 1 : 0) > n)
    throw InvalidInput("forms use " + std::to_string(max_x + (uses_z ? 1 : 0)) + " coordinates but dim is " +
                       std::to_string(n));

  std::vector<Vec> forms;
  for (const auto& f : raw) {
    Vec v(n, Scalar::zero(field));
    for (const auto& [i, c] : f.x) v[i] = c;
    if (f.z) v[n - 1] = *f.z;
    if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); }))
      throw ParseError("form is identically zero", f.position);
    forms.push_back(std::move(v));
  }
  ParsedForms out;
  out.arrangement = Arrangement::from_forms(n, field, forms, &out.duplicates);
  if (out.duplicates > 0)
    out.warnings.push_back(std::to_string(out.duplicates) + " repeated hyperplane(s) dropped");
  return out;
}

std::string format_linear_form(const Vec& normal) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    const Scalar& c = normal[i];
    if (c.is_zero()) continue;
    const bool rational = is_rational(c);
    const bool neg = rational && sgn(c.coefficient(0)) < 0;
    const Scalar a = neg ? -c : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    if (!a.is_one()) os << coefficient_text(a) << "*";
    os << "x" << (i + 1);
    first = false;
  }
  return os.str();
}

}  // namespace arrkit
