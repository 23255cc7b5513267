#include "arrkit/intermediate/intermediate.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "arrkit/arrangement/isomorphism.hpp"
#include "arrkit/error.hpp"

namespace arrkit {

void IntermediateLabel::validate() const {
  if (l < 2 || r < 2 || k < 0 || k > l)
    throw InvalidInput("intermediate label needs l >= 2, r >= 2, 0 <= k <= l; got " + to_string());
}

std::size_t IntermediateLabel::hyperplane_count() const {
  return static_cast<std::size_t>(k) + static_cast<std::size_t>(r) * static_cast<std::size_t>(l * (l - 1) / 2);
}

std::string IntermediateLabel::to_string() const {
  return "A^" + std::to_string(k) + "_" + std::to_string(l) + "(" + std::to_string(r) + ")";
}

Arrangement build_intermediate(const IntermediateLabel& label, std::size_t max_hyperplanes) {
  label.validate();
  if (label.hyperplane_count() > max_hyperplanes)
    throw CapExceeded(label.to_string() + " has " + std::to_string(label.hyperplane_count()) +
                          " hyperplanes, above the cap of " + std::to_string(max_hyperplanes),
                      0, -1);
  const Field f = Field::cyclotomic(label.r);
  const auto n = static_cast<std::size_t>(label.l);
  Arrangement a(n, f);
  auto blank = [&] { return Vec(n, Scalar::zero(f)); };
  for (std::size_t i = 0; i < static_cast<std::size_t>(label.k); ++i) {
    auto v = blank();
    v[i] = Scalar::one(f);
    a.add(v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int p = 0; p < label.r; ++p) {
        auto v = blank();
        v[i] = Scalar::one(f);
        v[j] = -Scalar::zeta_power(p, f);
        a.add(v);
      }
  if (a.size() != label.hyperplane_count()) throw Inconsistency("repeated hyperplane in " + label.to_string());
  return a;
}

namespace {

// The exponent formula without the bounds check, so that l = 1 works too.
Exponents formula(int l, int r, int k) {
  Exponents e;
  for (int i = 0; i + 2 <= l; ++i) e.push_back(static_cast<std::int64_t>(i) * r + 1);
  e.push_back(static_cast<std::int64_t>(l - 1) * r - l + k + 1);
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<RestrictionRow> rows(int l, int r, int k) {
  using C = HyperplaneClass;
  if (k == 0) return {{C::Any, {l - 1, r, 1}}};
  if (k == l) return {{C::Any, {l - 1, r, l - 1}}};
  std::vector<RestrictionRow> out;
  if (k >= 2) out.push_back({C::DiffLow, {l - 1, r, k - 1}});
  out.push_back({C::DiffMixed, {l - 1, r, k}});
  if (k + 2 <= l) out.push_back({C::DiffHigh, {l - 1, r, k + 1}});
  out.push_back({C::Coordinate, {l - 1, r, l - 1}});
  return out;
}

}  // namespace

Exponents intermediate_exponents(const IntermediateLabel& label) {
  label.validate();
  return formula(label.l, label.r, label.k);
}

const char* to_string(HyperplaneClass c) {
  switch (c) {
    case HyperplaneClass::Any: return "any";
    case HyperplaneClass::DiffLow: return "diff_low";
    case HyperplaneClass::DiffMixed: return "diff_mixed";
    case HyperplaneClass::DiffHigh: return "diff_high";
    case HyperplaneClass::Coordinate: return "coordinate";
  }
  return "?";
}

std::vector<RestrictionRow> table2_restriction_types(const IntermediateLabel& label) {
  label.validate();
  return rows(label.l, label.r, label.k);
}

HyperplaneClass classify_hyperplane(const IntermediateLabel& label, const Vec& normal) {
  label.validate();
  std::vector<int> support;  // 1-based coordinates
  for (std::size_t i = 0; i < normal.size(); ++i)
    if (!normal[i].is_zero()) support.push_back(static_cast<int>(i) + 1);
  if (normal.size() != static_cast<std::size_t>(label.l) || support.empty() || support.size() > 2)
    throw InvalidInput("form is not a hyperplane of " + label.to_string());
  if (support.size() == 1) {
    if (support[0] > label.k) throw InvalidInput("coordinate hyperplane not in " + label.to_string());
    return label.k == label.l ? HyperplaneClass::Any : HyperplaneClass::Coordinate;
  }
  if (label.k == 0 || label.k == label.l) return HyperplaneClass::Any;
  const int i = support[0], j = support[1];
  if (j <= label.k) return HyperplaneClass::DiffLow;
  if (i <= label.k) return HyperplaneClass::DiffMixed;
  return HyperplaneClass::DiffHigh;
}

Verdict symbolic_accuracy(const IntermediateLabel& label) {
  label.validate();
  const Exponents target = formula(label.l, label.r, label.k);
  std::set<std::pair<int, int>> level = {{label.l, label.k}};  // (l, k) at the current dimension
  for (int d = label.l - 1; d >= 1; --d) {
    std::set<std::pair<int, int>> next;
    for (auto [l, k] : level)
      for (const auto& row : rows(l, label.r, k)) next.emplace(row.result.l, row.result.k);
    level = std::move(next);
    const Exponents prefix(target.begin(), target.begin() + d);
    const bool hit = std::any_of(level.begin(), level.end(),
                                 [&](auto lk) { return formula(lk.first, label.r, lk.second) == prefix; });
    if (!hit) return Verdict::NotAccurate;
  }
  return Verdict::Accurate;
}

bool closed_form_accuracy(const IntermediateLabel& label) {
  label.validate();
  if (label.k == label.l) return true;
  if (label.k == 0) return label.r == 2 || label.l == 2;
  return label.r == 2 || label.r + label.k >= label.l;
}

AccuracyReport bruteforce_cross_check(const IntermediateLabel& label, const LatticeOptions& opts) {
  label.validate();
  if (label.l > 4 || label.r > 4)
    throw CapExceeded("brute-force accuracy limited to l <= 4 and r <= 4, got " + label.to_string(), 0, -1);
  AccuracyOptions o;
  o.lattice = opts;
  o.provenance = "exponents of " + label.to_string() + " from the closed formula";
  return check_accuracy(build_intermediate(label), intermediate_exponents(label), o);
}

LocalizationFixtureReport localization_fixture_check(int l, int r, const LatticeOptions& opts) {
  if (l < 4 || r < l - 1)
    throw InvalidInput("localization fixture needs l >= 4 and r >= l - 1, got l=" + std::to_string(l) +
                       " r=" + std::to_string(r));
  LocalizationFixtureReport rep;
  rep.whole = {l, r, 1};
  rep.local = {l - 1, r, 0};
  const auto a = build_intermediate(rep.whole);

  HyperplaneSet inner = a.none();
  for (std::size_t h = 0; h < a.size(); ++h) inner[h] = a.normal(h)[0].is_zero();
  const auto loc = localization(a, make_flat(a, inner));
  rep.localization_size = loc.size();
  rep.isomorphic = lattice_isomorphic(loc, build_intermediate(rep.local), opts);

  AccuracyOptions o;
  o.lattice = opts;
  o.provenance = "exponents of " + rep.whole.to_string() + " from the closed formula";
  rep.whole_report = check_accuracy(a, intermediate_exponents(rep.whole), o);

  // The localization keeps a one-dimensional center, hence the extra 0.
  Exponents le = intermediate_exponents(rep.local);
  le.insert(le.begin(), 0);
  o.provenance = "exponents of " + rep.local.to_string() + " from the closed formula, plus the center";
  rep.local_report = check_accuracy(loc, le, o);
  return rep;
}

}  // namespace arrkit
